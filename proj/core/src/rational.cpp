#include "nck/rational.hpp"

#include "nck/error.hpp"

namespace nck {

namespace {
bool valid_int_literal(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}
} // namespace

Int parse_int(const std::string& s) {
    if (!valid_int_literal(s)) throw SchemaError("malformed integer literal: \"" + s + "\"");
    return Int(s);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw SchemaError("zero denominator in rational literal: \"" + s + "\"");
    return Rat(num, den);
}

} // namespace nck
