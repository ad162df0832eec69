#include "idem/cli.hpp"

#include "idem/calculus.hpp"
#include "idem/graphs.hpp"
#include "idem/interval.hpp"
#include "idem/solvers.hpp"
#include "idem/systolic.hpp"
#include "idem/text_format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace idem::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::StarDiverges:
    case ErrorKind::NonStabilizing:
    case ErrorKind::NoPath:
    case ErrorKind::ZeroDivision: return kExitSolver;
    default: return kExitInput;
  }
}

namespace {

struct Options {
  std::string output;

  std::string input;
  std::string method = "gauss-jordan";
  std::optional<std::size_t> max_terms;
  bool analytic = false;
  bool report = false;

  std::string a_path;
  std::string b_path;
  std::string solve_method = "jacobi";
  std::optional<std::size_t> max_iter;

  std::string problem = "shortest";
  std::vector<std::size_t> witness;

  std::string x_path;
  std::string y_path;

  std::string mode = "sup";
  std::optional<std::string> subset;

  double xi_min = 0.0;
  double xi_max = 0.0;
  std::size_t xi_steps = 0;
  bool negate = false;

  std::string kernel_path;
  std::string f_path;

  double h = 1.0;
  std::optional<double> w1, w2, u, u1, u2;

  std::string inner = "max-plus";
  std::string ia, ib, ic;
  bool classical = false;
  std::size_t random = 0;
  std::uint64_t seed = 1;

  bool trace = false;
  std::string swap_to;
};

std::string fixed9(const Element& e) {
  if (const double* d = std::get_if<double>(&e)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", *d);
    return buf;
  }
  return render(e);
}

DenseVector as_vector(const DenseMatrix& m) {
  if (m.rows() != 1 && m.cols() != 1)
    fail(ErrorKind::ShapeMismatch, "a vector file must have one row or one column");
  return DenseVector(m.semiring(), m.data());
}

std::string report_line(const SolveReport& r) {
  return "# method " + std::string(to_string(r.method)) + " iterations " + std::to_string(r.iterations) +
         " stabilized " + (r.stabilized ? "true" : "false") + " residual_ok " + (r.residual_ok ? "true" : "false") +
         "\n";
}

std::vector<std::size_t> parse_indices(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorKind::UsageError, "--subset expects comma-separated indices, got '" + list + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

PathProblem problem_from(const std::string& name) {
  if (name == "shortest") return PathProblem::Shortest;
  if (name == "widest") return PathProblem::Widest;
  if (name == "reliable") return PathProblem::Reliable;
  return PathProblem::Reach;
}

ClassicalInterval parse_classical(const std::string& tok) {
  const Element e = parse_element(Semiring::interval_over(Semiring::max_plus()), tok);
  const auto& iv = std::get<Interval>(e);
  if (!std::holds_alternative<double>(iv.lo) || !std::holds_alternative<double>(iv.hi))
    fail(ErrorKind::InvariantViolation, "classical intervals need finite endpoints");
  return {std::get<double>(iv.lo), std::get<double>(iv.hi)};
}

std::string render_classical(ClassicalInterval c) {
  return "[" + render(Element(c.lo)) + "," + render(Element(c.hi)) + "]";
}

IntervalElement random_interval(const Semiring& inner, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-10, 10);
  auto scalar = [&]() -> Element {
    const int v = pick(rng);
    if (v == -10) return inner.zero();
    switch (inner.kind()) {
      case SemiringKind::Boolean: return v > 0;
      case SemiringKind::MaxTimes: return std::abs(v) / 8.0;
      default: return static_cast<double>(v);
    }
  };
  Element x = scalar();
  Element y = scalar();
  if (!inner.leq(x, y)) std::swap(x, y);
  return IntervalElement(inner, x, y);
}

std::string interval_demo(const Options& o) {
  std::ostringstream out;
  if (o.classical) {
    const auto a = parse_classical(o.ia);
    const auto b = parse_classical(o.ib);
    const auto c = parse_classical(o.ic);
    const auto r = classical_distributivity_witness(a, b, c);
    out << "mode classical\n";
    out << "a*(b+c) " << render_classical(r.left) << "\n";
    out << "a*b+a*c " << render_classical(r.right) << "\n";
    out << "distributive " << (r.equal ? "true" : "false") << "\n";
    out << "contained " << (r.left_within_right ? "true" : "false") << "\n";
    return out.str();
  }
  const Semiring inner = Semiring::parse(o.inner);
  const Semiring lifted = Semiring::interval_over(inner);
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    std::size_t equal = 0;
    for (std::size_t t = 0; t < o.random; ++t) {
      const auto a = random_interval(inner, rng);
      const auto b = random_interval(inner, rng);
      const auto c = random_interval(inner, rng);
      if (distributivity_witness(inner, a, b, c).equal) ++equal;
    }
    out << "mode idempotent " << inner.name() << "\n";
    out << "distributive " << equal << "/" << o.random << "\n";
    return out.str();
  }
  const IntervalElement a(inner, parse_element(lifted, o.ia));
  const IntervalElement b(inner, parse_element(lifted, o.ib));
  const IntervalElement c(inner, parse_element(lifted, o.ic));
  const auto r = distributivity_witness(inner, a, b, c);
  out << "mode idempotent " << inner.name() << "\n";
  out << "a+b " << render(interval_add(inner, a, b).packed()) << "\n";
  out << "a*b " << render(interval_mul(inner, a, b).packed()) << "\n";
  out << "a*(b+c) " << render(r.left) << "\n";
  out << "a*b+a*c " << render(r.right) << "\n";
  out << "distributive " << (r.equal ? "true" : "false") << "\n";
  return out.str();
}

std::string dequantize_cmd(const Options& o) {
  const DeformationParams p(o.h);
  std::ostringstream out;
  if (o.w1 && o.w2) {
    const Semiring s = Semiring::deformed(o.h);
    out << fixed9(s.add(*o.w1, *o.w2)) << "\n";
  } else if (o.u) {
    out << fixed9(dequantize(p, *o.u)) << "\n";
  } else if (o.u1 && o.u2) {
    const auto r = homomorphism_check(p, *o.u1, *o.u2);
    char buf[128];
    std::snprintf(buf, sizeof buf, "additive_residual %.3g\nmultiplicative_residual %.3g\n", r.additive_residual,
                  r.multiplicative_residual);
    out << buf;
  } else {
    fail(ErrorKind::UsageError, "dequantize needs --w1 and --w2, --u, or --u1 and --u2");
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Universal semiring algorithms: closures, Bellman equations, idempotent calculus"};
  app.name("idem");
  app.require_subcommand(1);
  app.add_option("-o,--output", o.output, "Write results to this file instead of standard output");

  auto* closure = app.add_subcommand("closure", "Matrix closure A* = 1 + A + A^2 + ...");
  closure->add_option("input", o.input, "Matrix file")->required();
  closure->add_option("--method", o.method)->check(CLI::IsMember({"gauss-jordan", "series"}));
  closure->add_option("--max-terms", o.max_terms, "Series term bound (default 2n+1)");
  closure->add_flag("--analytic", o.analytic, "Field pivots use 1/(1-a) for any a != 1");
  closure->add_flag("--report", o.report, "Append a '# method ...' report line");

  auto* solve = app.add_subcommand("solve", "Least solution of X = AX + B");
  solve->add_option("--a", o.a_path)->required();
  solve->add_option("--b", o.b_path)->required();
  solve->add_option("--method", o.solve_method)->check(CLI::IsMember({"jacobi", "gauss-seidel"}));
  solve->add_option("--max-iter", o.max_iter, "Iteration bound (default 2n+1)");
  solve->add_flag("--report", o.report);

  auto* paths = app.add_subcommand("paths", "All-pairs path problems on a graph file");
  paths->add_option("input", o.input, "Graph file")->required();
  paths->add_option("--problem", o.problem)->check(CLI::IsMember({"shortest", "widest", "reliable", "reach"}));
  paths->add_option("--witness", o.witness, "src dst")->expected(2);

  auto* dot_cmd = app.add_subcommand("dot", "Semiring scalar product of two vector files");
  dot_cmd->add_option("--x", o.x_path)->required();
  dot_cmd->add_option("--y", o.y_path)->required();

  auto* integrate = app.add_subcommand("integrate", "Idempotent integral, Riemann sum or measure");
  integrate->add_option("input", o.input, "Function file")->required();
  integrate->add_option("--mode", o.mode)->check(CLI::IsMember({"sup", "riemann"}));
  integrate->add_option("--subset", o.subset, "Comma-separated grid indices for the idempotent measure");

  auto* legendre = app.add_subcommand("legendre", "Legendre transform sup_x (xi x + f(x))");
  legendre->add_option("input", o.input, "Function file")->required();
  legendre->add_option("--xi-min", o.xi_min)->required();
  legendre->add_option("--xi-max", o.xi_max)->required();
  legendre->add_option("--xi-steps", o.xi_steps)->required();
  legendre->add_flag("--negate", o.negate, "Fenchel conjugate sup_x (xi x - f(x)) of a min-plus function");

  auto* apply_kernel = app.add_subcommand("apply-kernel", "(Kf)(x) = sum_y K(x,y) * f(y)");
  apply_kernel->add_option("--kernel", o.kernel_path)->required();
  apply_kernel->add_option("--f", o.f_path)->required();

  auto* deq = app.add_subcommand("dequantize", "Deformed operations and D_h(u) = h ln u");
  deq->set_help_flag("--help", "Print this help message and exit");
  deq->add_option("--h", o.h)->required();
  deq->add_option("--w1", o.w1);
  deq->add_option("--w2", o.w2);
  deq->add_option("--u", o.u);
  deq->add_option("--u1", o.u1);
  deq->add_option("--u2", o.u2);

  auto* idemo = app.add_subcommand("interval-demo", "Interval arithmetic and distributivity");
  idemo->add_option("--inner", o.inner);
  idemo->add_option("--a", o.ia);
  idemo->add_option("--b", o.ib);
  idemo->add_option("--c", o.ic);
  idemo->add_flag("--classical", o.classical, "Ordinary real interval arithmetic");
  idemo->add_option("--random", o.random, "Check this many random triples instead");
  idemo->add_option("--seed", o.seed);

  auto* systolic = app.add_subcommand("systolic", "Systolic-array matrix product");
  systolic->add_option("--a", o.a_path)->required();
  systolic->add_option("--b", o.b_path)->required();
  systolic->add_flag("--trace", o.trace, "Print one line per cell event");
  systolic->add_option("--semiring", o.swap_to, "Run the cells with this semiring's operations");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    std::string result;
    if (closure->parsed()) {
      const DenseMatrix a = parse_matrix_file(o.input);
      const SolveReport r = o.method == "series"
                                ? closure_series(a, o.max_terms)
                                : closure_gauss_jordan(a, o.analytic ? StarPolicy::Analytic : StarPolicy::Series);
      result = render_matrix(r.solution) + (o.report ? report_line(r) : "");
    } else if (solve->parsed()) {
      const DenseMatrix a = parse_matrix_file(o.a_path);
      const DenseMatrix b = parse_matrix_file(o.b_path);
      const SolveReport r =
          o.solve_method == "jacobi" ? bellman_jacobi(a, b, o.max_iter) : bellman_gauss_seidel(a, b, o.max_iter);
      result = render_matrix(r.solution) + (o.report ? report_line(r) : "");
    } else if (paths->parsed()) {
      const WeightedDigraph g = parse_graph_file(o.input);
      const PathProblem p = problem_from(o.problem);
      if (!o.witness.empty()) {
        const PathWitness w = extract_path(g, semiring_for(p), o.witness[0], o.witness[1]);
        result = "path";
        for (std::size_t v : w.nodes) result += " " + std::to_string(v);
        result += "\nvalue " + render(w.value) + "\n";
      } else {
        result = render_matrix(solve_paths(g, p));
      }
    } else if (dot_cmd->parsed()) {
      const DenseVector x = as_vector(parse_matrix_file(o.x_path));
      const DenseVector y = as_vector(parse_matrix_file(o.y_path));
      result = render(dot(x, y)) + "\n";
    } else if (integrate->parsed()) {
      const SampledFunction f = parse_function_file(o.input);
      if (o.subset) {
        result = render(idempotent_measure(f, parse_indices(*o.subset))) + "\n";
      } else if (o.mode == "riemann") {
        result = render(riemann_sum(f)) + "\n";
      } else {
        result = render(idempotent_integral(f)) + "\n";
      }
    } else if (legendre->parsed()) {
      const SampledFunction f = parse_function_file(o.input);
      const auto conv = o.negate ? LegendreConvention::Fenchel : LegendreConvention::SupPlus;
      result = render_function(legendre_transform(f, uniform_grid(o.xi_min, o.xi_max, o.xi_steps), conv));
    } else if (apply_kernel->parsed()) {
      result = render_function(apply_operator(parse_kernel_file(o.kernel_path), parse_function_file(o.f_path)));
    } else if (deq->parsed()) {
      result = dequantize_cmd(o);
    } else if (idemo->parsed()) {
      if (o.random == 0 && (o.ia.empty() || o.ib.empty() || o.ic.empty()))
        fail(ErrorKind::UsageError, "interval-demo needs --a, --b and --c (or --random N)");
      result = interval_demo(o);
    } else if (systolic->parsed()) {
      const DenseMatrix a = parse_matrix_file(o.a_path);
      const DenseMatrix b = parse_matrix_file(o.b_path);
      SystolicArray array(a.semiring());
      if (!o.swap_to.empty()) array = array.swap_operations(Semiring::parse(o.swap_to));
      const SimResult r = array.run(a, b, o.trace);
      result = render_matrix(r.product) + "# cycles " + std::to_string(r.cycles) + "\n";
      if (r.trace_dropped) result += "# trace dropped: n exceeds " + std::to_string(kTraceCap) + "\n";
      for (const auto& e : r.events) result += render(e) + "\n";
    }

    if (o.output.empty()) {
      out << result;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) fail(ErrorKind::UsageError, "cannot write " + o.output);
      file << result;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace idem::cli
