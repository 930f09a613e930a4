#include "dedekind/integers.hpp"

#include <limits>

#include "dedekind/errors.hpp"

namespace dedekind {

Int int_from_decimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("integer literal '" + s + "' has no digits");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("invalid integer literal '" + s + "'");
    }
    Int r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("invalid integer literal '" + s + "'");
    return r;
}

std::size_t to_size(const Int& a, const std::string& context) {
    if (a < 0 || !a.fits_ulong_p() ||
        a.get_ui() > std::numeric_limits<std::size_t>::max())
        throw CapExceededError(context + ": value " + to_decimal(a) + " out of range");
    return static_cast<std::size_t>(a.get_ui());
}

}  // namespace dedekind
