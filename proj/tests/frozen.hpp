#pragma once

// Values frozen before the implementation was trusted. Each is either read
// off the reference statement or computed once by hand and pinned.

#include <array>
#include <string>
#include <vector>

namespace frozen {

inline const std::vector<std::string> kHallNames = {
    "X",    "Y",    "Z",    "YX",   "ZX",   "ZY",   "YXX",  "YXY",      "YXZ",      "ZXX",      "ZXY",
    "ZXZ",  "ZYY",  "ZYZ",  "(ZX)(YX)", "(ZY)(YX)", "(ZY)(ZX)", "YXXX", "YXXY", "YXXZ", "YXYY", "YXYZ",
    "YXZZ", "ZXXX", "ZXXY", "ZXXZ", "ZXYY", "ZXYZ", "ZXZZ", "ZYYY", "ZYYZ", "ZYZZ"};

inline const std::vector<std::string> kLeftNormedF = {
    "X",    "Y",    "Z",    "XY",   "XZ",   "YZ",   "XYY",  "XZZ",  "XYZ",  "XZY",  "XYX",
    "XZX",  "YZY",  "ZYZ",  "XYYY", "XZZZ", "XYXX", "XZXX", "XYXY", "XZXZ", "XYXZ", "XZXY",
    "XYZX", "XYZZ", "XZYY", "XYZY", "XZYZ", "XYYZ", "XZZY", "YZYY", "YZYZ", "ZYZZ"};

inline const std::vector<std::string> kLambdaWords = {
    "x",    "y",    "z",    "xy",   "xz",   "yz",   "xyy",  "xzz",  "xyz",  "xzy",  "xyx",  "xzx",  "xyyy",
    "xzzz", "xyxx", "xzxx", "xyxy", "xzxz", "xyxz", "xzxy", "xyzx", "xyzz", "xzyy", "xyzy", "xzyz"};

// Exponents of (a, b, c) on the torus diagonal, in the order above.
inline const std::vector<std::array<int, 3>> kDiag = {
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 2, 0}, {1, 0, 2}, {1, 1, 1},
    {1, 1, 1}, {2, 1, 0}, {2, 0, 1}, {1, 3, 0}, {1, 0, 3}, {3, 1, 0}, {3, 0, 1}, {2, 2, 0}, {2, 0, 2},
    {2, 1, 1}, {2, 1, 1}, {2, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 1}, {1, 1, 2}};

inline const std::string kPhi4 = "X + Y + 1/2*XY - 1/12*XYX + 1/12*XYY - 1/24*XYXY";
inline const std::string kPhi2 = "X + Y + 1/2*XY";
inline const std::vector<std::pair<std::string, std::string>> kPhi4Terms = {
    {"X", "1"}, {"Y", "1"}, {"XY", "1/2"}, {"XYX", "-1/12"}, {"XYY", "1/12"}, {"XYXY", "-1/24"}};

// 24x * 24y in the group exp(24 L).
inline const std::string kProduct24Expr = "24x + 24y + 288xy - 1152xyx + 1152xyy - 13824xyxy";

inline const std::string kZetaText =
    "(1 + q^285*t^102 + 2*q^286*t^102 + 2*q^572*t^204)/((1 - q^285*t^102)*(1 - q^573*t^204))";
inline const std::string kZetaLatex =
    "\\frac{1 + p^{285-102s} + 2p^{286-102s} + 2p^{572-204s}}{(1 - p^{285-102s})(1 - p^{573-204s})}";

inline const std::string kNoFunctionalEquation = "no functional equation: ratio is not ±p^b t^c";

}  // namespace frozen
