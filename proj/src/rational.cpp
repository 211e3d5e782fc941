#include "mzv/rational.hpp"

#include "mzv/errors.hpp"

namespace mzv {

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error("BadRational", "cannot parse rational '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace mzv
