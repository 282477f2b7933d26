#include "cl3exp/golden.hpp"

#include <cmath>

namespace cl3 {

const std::array<WorkedExample, 7>& worked_examples() {
  static const double root = std::sqrt(23461.0);
  static const std::array<WorkedExample, 7> examples = {{
      {1, Signature::cl03(), "-8 - 6*e2 - 9*e3 + 5*e12 - 5*e13 + 6*e23 - 4*e123", 353.0, 53.0,
       {0.0049747331601599802, 0.0063385241027113558, -0.0010563005549052227,
        -0.0042255025418208988, -0.0042257828425409068, 0.0010565207911852287,
        0.0063384039738313526, -0.0049686004738006178}},
      {2, Signature::cl30(), "-8 - 6*e2 - 9*e3 + 5*e12 - 5*e13 + 6*e23 - 4*e123",
       (31.0 + root) / 2.0, (root - 31.0) / 2.0,
       {1.8038113655771693, -1.184791739727248, -1.1501959481805968, -1.2316306973845419,
        -1.6414630275842972, 1.0490671577206732, 0.16286949840789006, 1.6827383469595936}},
      {3, Signature::cl12(), "3 - e1 + 2*e12", 5.0, 0.0,
       {95.038202212864562, -41.542342462505893, 0, 0, 83.084684925011786, 0, 0, 0}},
      {4, Signature::cl21(), "-8 - 6*e2 - 9*e3 + 5*e12 - 5*e13 + 6*e23 - 4*e123", 159.0, -141.0,
       {657.23900234516793, -332.09705140873717, -608.84459437546479, -221.39803446166141,
        -221.39803416739704, -608.84459435444592, 332.09705153485049, -657.23899620667464}},
      {5, Signature::cl21(), "-6*e2 + 5*e12 + e123", -11.0, -11.0,
       {21.297154140022762, 0, -38.426738274114776, -24.387982751672936, 32.022281895095645,
        29.265579302007527, 0, 16.219788131530461}},
      {6, Signature::cl21(), "2 + e3 + 6*e12 + 3*e123", 25.0, 49.0,
       {21.18827310128205, 0, 0, 71.279336402848514, -71.037644540054714, 0, 0,
        20.910927961256345}},
      {7, Signature::cl21(), "2 - 10*e2 - 10*e3 + 2*e13 + e23 + e123", -45.0, 35.0,
       {4114.2813056649447, 613.21236454431471, -7356.8992537741397, -6130.47452468551,
        6132.1236454431473, 7358.2185503802484, 613.047452468551, 4111.7441426127771}},
  }};
  return examples;
}

}  // namespace cl3
