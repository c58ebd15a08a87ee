#include "fo52/rat.hpp"

#include <cctype>

namespace fo52 {

namespace {

bool valid_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat rat_parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int_token(s)) throw ParseError("rat_parse: bad rational '" + s + "'");
        Rat r(s);
        r.canonicalize();
        return r;
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int_token(num) || !valid_int_token(den))
        throw ParseError("rat_parse: bad rational '" + s + "'");
    Rat r(s);
    if (sgn(r.get_den()) == 0) throw ParseError("rat_parse: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

} // namespace fo52
