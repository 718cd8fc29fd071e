// Copyright 2026 The fable authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fable {

/// Largest qubit count the dense machinery is sized for. An n-qubit matrix
/// holds 4^n doubles once it reaches the angle transform, so n = 13 already
/// costs 512 MiB per buffer.
inline constexpr int kMaxQubits = 13;

/// Real 2^n x 2^n matrix, row-major.
struct DenseMatrix {
  int num_qubits = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(int n, std::vector<double> values);
  static DenseMatrix zero(int n);
  static DenseMatrix identity(int n);

  std::uint64_t dim() const { return std::uint64_t(1) << num_qubits; }
  double& at(std::uint64_t row, std::uint64_t col) {
    return data[row * dim() + col];
  }
  double at(std::uint64_t row, std::uint64_t col) const {
    return data[row * dim() + col];
  }
};

struct SparseEntry {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  double value = 0.0;
};

/// Real 2^n x 2^n matrix stored as coordinate triples, kept sorted row-major
/// with no duplicate positions. Values are finite and nonzero.
struct SparseMatrix {
  int num_qubits = 0;
  std::vector<SparseEntry> entries;

  SparseMatrix() = default;
  SparseMatrix(int n, std::vector<SparseEntry> raw_entries);

  std::uint64_t dim() const { return std::uint64_t(1) << num_qubits; }
  std::uint64_t nnz() const { return entries.size(); }
  /// Average nonzeros per row/column, |A| / N.
  double relative_sparsity() const {
    return double(entries.size()) / double(dim());
  }
};

void check_qubit_count(int n);

DenseMatrix to_dense(const SparseMatrix& a);
SparseMatrix to_sparse(const DenseMatrix& a);

bool matrices_equal(const DenseMatrix& a, const DenseMatrix& b, double tol);
double max_entry_deviation(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, double factor);
SparseMatrix scale(const SparseMatrix& a, double factor);

/// MatrixMarket coordinate format, 1-based indices on disk. `comment` lines,
/// if given, are written after the banner prefixed with "%".
void write_matrix_market(const SparseMatrix& a, std::ostream& out,
                         const std::vector<std::string>& comments = {});
void write_matrix_market(const SparseMatrix& a, const std::string& path,
                         const std::vector<std::string>& comments = {});
SparseMatrix read_matrix_market(std::istream& in);
SparseMatrix read_matrix_market_file(const std::string& path);

/// Dense CSV, one row per line.
void write_dense_csv(const DenseMatrix& a, std::ostream& out);
void write_dense_csv(const DenseMatrix& a, const std::string& path);
DenseMatrix read_dense_csv(std::istream& in);
DenseMatrix read_dense_csv_file(const std::string& path);

/// Reads either format, sniffing the MatrixMarket banner.
DenseMatrix read_matrix_any(const std::string& path, bool* was_sparse = nullptr);

/// Formats a double with 17 significant digits, enough to round-trip exactly.
std::string format_double(double v);

}  // namespace fable
