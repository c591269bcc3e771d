#include "tdual/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace tdual::oracle {

std::size_t bareiss_rank(IntegerMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
        }
        const Integer p = m(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Integer lead = m(r, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer num = p * m(r, j) - lead * m(rank, j);
                if (num != 0) {
                    Integer q;
                    Integer rem;
                    boost::multiprecision::divide_qr(num, previous, q, rem);
                    if (rem != 0) throw std::logic_error("inexact division in fraction-free elimination");
                    num = std::move(q);
                }
                m(r, j) = std::move(num);
            }
            m(r, c) = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

}  // namespace tdual::oracle
