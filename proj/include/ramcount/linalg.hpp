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

#ifndef RAMCOUNT_LINALG_HPP
#define RAMCOUNT_LINALG_HPP

#include <vector>

#include "ramcount/field.hpp"

namespace ramcount {

/// Small dense row-major matrix over a finite field.
class Matrix {
  public:
    Matrix(FiniteField field, int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const FiniteField& field() const noexcept { return field_; }
    Elem& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    Elem at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    std::vector<Elem> row(int r) const;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref();
    int rank() const;
    /// Basis of {v : M v = 0}.
    std::vector<std::vector<Elem>> nullspace() const;

  private:
    FiniteField field_;
    int rows_;
    int cols_;
    std::vector<Elem> data_;
};

}  // namespace ramcount

#endif
