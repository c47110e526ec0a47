#pragma once

namespace purejump {

// Inverse standard normal CDF, Wichura's AS 241 (double-precision branch).
// Absolute error below 1e-15 over (0,1); the decision rule needs 1e-10.
double normal_quantile(double p);

}  // namespace purejump
