#include "steinhaus/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "steinhaus/detail/word_kernels.hpp"

namespace steinhaus {

namespace {

void require_nonempty(const BitSeq& x, const char* what) {
    if (x.empty()) throw std::invalid_argument(std::string(what) + " of the empty sequence");
}

bool fits_word(const BitSeq& x) { return x.size() <= BitSeq::kWordBits; }

}  // namespace

BitSeq rot_r(const BitSeq& x) {
    require_nonempty(x, "rotation r");
    const std::size_t n = x.size();
    if (fits_word(x)) {
        return BitSeq::from_word(detail::rot_r(x.word(0), static_cast<unsigned>(n)), n);
    }
    BitSeq out(n);
    BitSeq row = x;
    for (std::size_t j = 0; j < n; ++j) {
        out.set(j, row[row.size() - 1]);
        if (row.size() > 1) row = derivative(row);
    }
    return out;
}

BitSeq rot_l(const BitSeq& x) {
    require_nonempty(x, "rotation l");
    const std::size_t n = x.size();
    if (fits_word(x)) {
        return BitSeq::from_word(detail::rot_l(x.word(0), static_cast<unsigned>(n)), n);
    }
    BitSeq out(n);
    BitSeq row = x;
    for (std::size_t i = 0; i < n; ++i) {
        out.set(n - 1 - i, row[0]);
        if (row.size() > 1) row = derivative(row);
    }
    return out;
}

BitSeq invert_i(const BitSeq& x) {
    const std::size_t n = x.size();
    if (fits_word(x)) {
        return BitSeq::from_word(detail::reverse(x.word(0), static_cast<unsigned>(n)), n);
    }
    BitSeq out(n);
    for (std::size_t j = 0; j < n; ++j) out.set(j, x[n - 1 - j]);
    return out;
}

bool Orbit::contains(const BitSeq& x) const {
    return std::binary_search(members.begin(), members.end(), x, LexLess{});
}

std::vector<BitSeq> images(const BitSeq& x) {
    require_nonempty(x, "orbit");
    const BitSeq ix = invert_i(x);
    return {x, rot_r(x), rot_l(x), ix, rot_r(ix), rot_l(ix)};
}

Orbit orbit(const BitSeq& x) {
    Orbit o;
    o.members = images(x);
    std::sort(o.members.begin(), o.members.end(), LexLess{});
    o.members.erase(std::unique(o.members.begin(), o.members.end()), o.members.end());
    o.canonical = o.members.front();
    return o;
}

BitSeq canonical(const BitSeq& x) {
    const auto all = images(x);
    return *std::min_element(all.begin(), all.end(), LexLess{});
}

}  // namespace steinhaus
