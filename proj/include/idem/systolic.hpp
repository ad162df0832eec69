#pragma once

#include "idem/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace idem {

enum class CellAction { Receive, MulAcc, Forward };

/// Boundary port a value entered through (Receive) or the neighbour it
/// leaves towards (Forward). MulAcc events use None.
enum class Port { None, West, North, East, South };

struct SystolicTraceEvent {
  std::size_t cycle;
  std::size_t row;
  std::size_t col;
  CellAction action;
  Port port;
  std::vector<Element> operands;
};

struct SimResult {
  DenseMatrix product;
  std::size_t cycles;
  std::vector<SystolicTraceEvent> events;
  /// Tracing was requested but n exceeds the trace cap.
  bool trace_dropped = false;
};

/// Largest n for which trace events are kept.
inline constexpr std::size_t kTraceCap = 8;

/// Output-stationary n×n mesh. Cell (i, j) keeps c_ij (initially 𝟘); row i
/// of A enters from the west delayed by i cycles, column j of B from the
/// north delayed by j cycles. Each cycle a cell holding a pair (a, b) does
/// c ← c ⊕ (a ⊙ b) and passes a east and b south. The last pair reaches
/// cell (n−1, n−1) on cycle 3n − 3, so a run takes 3n − 2 cycles.
///
/// The cell program only calls ⊕ and ⊙ of the configured semiring; swapping
/// it changes the arithmetic and nothing else.
class SystolicArray {
 public:
  explicit SystolicArray(Semiring ops) : ops_(std::move(ops)) {}

  const Semiring& operations() const { return ops_; }

  /// Same schedule with different basic operations.
  SystolicArray swap_operations(const Semiring& ops) const { return SystolicArray(ops); }

  /// A and B must be square of equal size (ShapeMismatch) over the same
  /// semiring (SemiringMismatch); their entries are read under operations()
  /// (CarrierMismatch if they do not fit).
  SimResult run(const DenseMatrix& a, const DenseMatrix& b, bool trace = false) const;

 private:
  Semiring ops_;
};

/// Runs the array with A's own semiring.
SimResult simulate_matmul(const DenseMatrix& a, const DenseMatrix& b, bool trace = false);

/// `cycle cell_i cell_j action [port] operands...`
std::string render(const SystolicTraceEvent& e);

}  // namespace idem
