#include "tancone/rational.hpp"

#include <cctype>

namespace tancone {

Rat parse_rational(const std::string& text) {
    // Grammar: [-]digits[/digits]
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw RationalParseError("malformed rational literal '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw RationalParseError("malformed rational literal '" + text + "'");
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size())
            throw RationalParseError("malformed rational literal '" + text + "'");
        std::string den = text.substr(den_begin);
        if (mpz_class(den) == 0) throw RationalParseError("zero denominator in '" + text + "'");
    }
    Rat r(text);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool rational_sqrt(const Rat& r, Rat* root) {
    if (r < 0) return false;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (root) *root = Rat(sn, sd);
    return true;
}

} // namespace tancone
