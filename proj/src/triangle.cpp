#include "steinhaus/triangle.hpp"

#include <stdexcept>

#include "steinhaus/detail/word_kernels.hpp"

namespace steinhaus {

namespace {

void require_nonempty(const BitSeq& x, const char* what) {
    if (x.empty()) throw std::invalid_argument(std::string(what) + " of the empty sequence");
}

}  // namespace

std::size_t Triangle::weight() const noexcept {
    std::size_t total = 0;
    for (const auto& row : rows) total += row.weight();
    return total;
}

Triangle build(const BitSeq& x) {
    require_nonempty(x, "triangle");
    Triangle t;
    t.rows.reserve(x.size());
    t.rows.push_back(x);
    while (t.rows.back().size() > 1) t.rows.push_back(derivative(t.rows.back()));
    return t;
}

std::size_t triangle_weight(const BitSeq& x) {
    require_nonempty(x, "triangle weight");
    if (x.size() <= BitSeq::kWordBits) {
        return detail::triangle_weight(x.word(0), static_cast<unsigned>(x.size()));
    }
    std::size_t total = 0;
    BitSeq row = x;
    while (true) {
        total += row.weight();
        if (row.size() == 1) break;
        row = derivative(row);
    }
    return total;
}

BitSeq subtriangle_generator(const BitSeq& x, std::size_t row, std::size_t start, std::size_t k) {
    const std::size_t n = x.size();
    if (row >= n || k == 0 || start > n - row || k > n - row - start) {
        throw std::out_of_range("subtriangle (row " + std::to_string(row) + ", start " +
                                std::to_string(start) + ", size " + std::to_string(k) +
                                ") out of range for length " + std::to_string(n));
    }
    const BitSeq r = derivative_k(x, row);
    BitSeq g(k);
    for (std::size_t j = 0; j < k; ++j) g.set(j, r[start + j]);
    return g;
}

std::size_t s3(const BitSeq& x) {
    if (x.size() < 3) throw std::invalid_argument("s3 needs a sequence of length at least 3");
    const BitSeq d1 = derivative(x);
    return x.weight() + d1.weight() + derivative(d1).weight();
}

std::string render(const BitSeq& x, const RenderOptions& options) {
    std::string out;
    if (x.empty()) return out;
    const Triangle t = build(x);
    for (std::size_t i = 0; i < t.size(); ++i) {
        out.append(i, ' ');
        const BitSeq& row = t.rows[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out.push_back(' ');
            out.push_back(row[j] ? options.one : options.zero);
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace steinhaus
