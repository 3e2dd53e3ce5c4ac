#include "sdual/rational.hpp"

namespace sdual {

std::string rat_str(const mpq_class& q) {
    return q.get_str();
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (im == 0) return rat_str(re);
    std::string imag;
    if (im == 1) imag = "i";
    else if (im == -1) imag = "-i";
    else imag = rat_str(im) + "*i";
    if (re == 0) return imag;
    if (im > 0) return rat_str(re) + "+" + imag;
    return rat_str(re) + imag; // imag already carries the minus sign
}

} // namespace sdual
