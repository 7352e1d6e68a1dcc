/*
   Copyright 2026 The ramcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ramcount/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ramcount {

Matrix::Matrix(FiniteField field, int rows, int cols) : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Elem{0});
}

std::vector<Elem> Matrix::row(int r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<int> Matrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int sel = -1;
        for (int i = r; i < rows_; ++i)
            if (at(i, c).v != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
        const Elem inv = field_.inv(at(r, c));
        for (int j = 0; j < cols_; ++j) at(r, j) = field_.mul(at(r, j), inv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).v == 0) continue;
            const Elem f = at(i, c);
            for (int j = 0; j < cols_; ++j) at(i, j) = field_.sub(at(i, j), field_.mul(f, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Matrix::rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
}

std::vector<std::vector<Elem>> Matrix::nullspace() const {
    Matrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Elem>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Elem> v(static_cast<std::size_t>(cols_), Elem{0});
        v[static_cast<std::size_t>(free)] = field_.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = field_.neg(m.at(static_cast<int>(i), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ramcount
