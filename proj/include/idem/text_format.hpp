#pragma once

#include "idem/calculus.hpp"
#include "idem/graphs.hpp"
#include "idem/matrix.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace idem {

// Line-oriented text formats. `#` starts a comment anywhere on a line.
//
//   semiring <name>          graph <n>              function <semiring>
//   shape <rows> <cols>      edge <src> <dst> <w>   <x> <value>
//   <rows> lines of tokens   ...                    ...
//
//   kernel <semiring>
//   xs <x_1> ... <x_p>
//   ys <y_1> ... <y_q>
//   <p> lines of <q> tokens
//
// Element tokens: decimal literals, `p/q`, `inf`, `-inf`, `true`, `false`,
// `zero`, `one`, `[lo,hi]`.
//
// Syntax problems raise ParseError with a 1-based line and column; values
// that parse but break an invariant (foreign carrier, lo above hi, grid
// not increasing) raise InvariantViolation naming the same position.

/// One element token under `s`; `line`/`col` are only used for diagnostics.
Element parse_element(const Semiring& s, std::string_view token, std::size_t line = 1, std::size_t col = 1);

DenseMatrix parse_matrix(std::string_view text);
WeightedDigraph parse_graph(std::string_view text);
SampledFunction parse_function(std::string_view text);
SampledKernel parse_kernel(std::string_view text);

DenseMatrix parse_matrix_file(const std::filesystem::path& path);
WeightedDigraph parse_graph_file(const std::filesystem::path& path);
SampledFunction parse_function_file(const std::filesystem::path& path);
SampledKernel parse_kernel_file(const std::filesystem::path& path);

std::string render_matrix(const DenseMatrix& m);
std::string render_function(const SampledFunction& f);

}  // namespace idem
