#include "cacti/rational.hpp"

#include <stdexcept>

namespace cacti {

Q parse_rational(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("empty rational");
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const Z& z) { return z.get_str(); }

} // namespace cacti
