#include "idem/systolic.hpp"

#include "idem/error.hpp"

#include <optional>

namespace idem {

namespace {

using Slot = std::optional<Element>;

const char* action_name(CellAction a) {
  switch (a) {
    case CellAction::Receive: return "receive";
    case CellAction::MulAcc: return "mulacc";
    case CellAction::Forward: return "forward";
  }
  return "?";
}

const char* port_name(Port p) {
  switch (p) {
    case Port::None: return "";
    case Port::West: return "W";
    case Port::North: return "N";
    case Port::East: return "E";
    case Port::South: return "S";
  }
  return "";
}

}  // namespace

SimResult SystolicArray::run(const DenseMatrix& a_in, const DenseMatrix& b_in, bool trace) const {
  require_same_semiring(a_in.semiring(), b_in.semiring());
  if (!a_in.square() || !b_in.square() || a_in.rows() != b_in.rows())
    fail(ErrorKind::ShapeMismatch, "systolic array needs two n×n matrices");
  const DenseMatrix a = a_in.retag(ops_);
  const DenseMatrix b = b_in.retag(ops_);
  const Semiring& s = ops_;
  const std::size_t n = a.rows();
  const bool keep = trace && n <= kTraceCap;

  std::vector<Element> acc(n * n, s.zero());
  std::vector<Slot> a_reg(n * n);
  std::vector<Slot> b_reg(n * n);
  std::vector<SystolicTraceEvent> events;
  auto emit = [&](std::size_t t, std::size_t i, std::size_t j, CellAction act, Port port,
                  std::vector<Element> ops) {
    if (keep) events.push_back({t, i, j, act, port, std::move(ops)});
  };

  std::size_t cycles = 0;
  for (std::size_t t = 0;; ++t) {
    std::vector<Slot> a_next(n * n);
    std::vector<Slot> b_next(n * n);
    bool active = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Slot x;
        Slot y;
        if (j == 0) {
          if (t >= i && t - i < n) {
            x = a(i, t - i);
            emit(t, i, j, CellAction::Receive, Port::West, {*x});
          }
        } else {
          x = a_reg[i * n + j - 1];
        }
        if (i == 0) {
          if (t >= j && t - j < n) {
            y = b(t - j, j);
            emit(t, i, j, CellAction::Receive, Port::North, {*y});
          }
        } else {
          y = b_reg[(i - 1) * n + j];
        }
        if (!x || !y) continue;
        active = true;
        acc[i * n + j] = s.add(acc[i * n + j], s.mul(*x, *y));
        emit(t, i, j, CellAction::MulAcc, Port::None, {*x, *y});
        if (j + 1 < n) emit(t, i, j, CellAction::Forward, Port::East, {*x});
        if (i + 1 < n) emit(t, i, j, CellAction::Forward, Port::South, {*y});
        a_next[i * n + j] = std::move(x);
        b_next[i * n + j] = std::move(y);
      }
    }
    if (!active) break;
    cycles = t + 1;
    a_reg = std::move(a_next);
    b_reg = std::move(b_next);
  }

  SimResult result{DenseMatrix(s, n, n, std::move(acc)), cycles, std::move(events)};
  result.trace_dropped = trace && !keep;
  return result;
}

SimResult simulate_matmul(const DenseMatrix& a, const DenseMatrix& b, bool trace) {
  return SystolicArray(a.semiring()).run(a, b, trace);
}

std::string render(const SystolicTraceEvent& e) {
  std::string line = std::to_string(e.cycle) + " " + std::to_string(e.row) + " " + std::to_string(e.col) + " " +
                     action_name(e.action);
  if (e.port != Port::None) line += std::string(" ") + port_name(e.port);
  for (const Element& op : e.operands) line += " " + render(op);
  return line;
}

}  // namespace idem
