#include "fp/precision.hpp"

#include <iomanip>
#include <sstream>

namespace fp {

std::string decimal_string(const Real& x, unsigned digits) {
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(digits)) << x;
    return os.str();
}

std::string decimal_string(const Complex& z, unsigned digits) {
    std::string s = decimal_string(z.re, digits);
    std::string i = decimal_string(z.im, digits);
    if (!i.empty() && i[0] != '-') s += "+";
    return s + i + "i";
}

Real parse_real(const std::string& s) {
    return Real(s);
}

}  // namespace fp
