#pragma once

// Command dispatch for the kostantq executable, kept in a header so the test
// suite can drive it in-process.
//
// Exit status: 0 success, 2 domain error, 3 cross-check disagreement,
// 64 usage error (unknown subcommand, malformed option values).

#include "kostantq/kostantq.hpp"
#include "kostantq/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kostantq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitDisagree = 3;
inline constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Disagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int rank = 0;
  int size = 0;
  std::string mu, lambda, nu, beta, roots, point, matrix;
  std::optional<long> q;
  int box = 6;
  bool json = false;
  bool oracle = false;
  bool classical = false;
  bool distinct = false;
  bool inclusion_exclusion = false;
  bool count_only = false;
};

namespace detail {

inline Weight weight_arg(const std::string& text, const char* name) {
  if (text.empty()) throw UsageError(std::string("missing --") + name);
  try {
    return parse_weight(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

/// Rank from -n, -k or the length of a weight, whichever is available; all
/// given values must agree.
inline RootSystemA system_for(const Options& o, std::optional<std::size_t> weight_len) {
  std::optional<int> n;
  auto merge = [&](int value) {
    if (n && *n != value) throw DomainError("inconsistent rank: " + std::to_string(*n) + " vs " + std::to_string(value));
    n = value;
  };
  if (o.rank > 0) merge(o.rank);
  if (o.size > 0) merge(o.size - 1);
  if (weight_len) merge(static_cast<int>(*weight_len) - 1);
  if (!n) throw UsageError("rank not given: use -n or -k");
  if (*n < 1) throw DomainError("rank must be at least 1");
  if (*n > 8) throw DomainError("rank " + std::to_string(*n) + " is beyond the supported range (at most 8)");
  return RootSystemA(*n);
}

inline RootSubset subset_arg(const std::string& text, std::size_t num_roots) {
  if (text.empty()) return RootSubset::all(num_roots);
  if (text == "none") return RootSubset();
  std::vector<int> idx;
  try {
    idx = parse_int_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--roots: ") + e.what());
  }
  std::uint64_t bits = 0;
  for (int i : idx) {
    if (i < 0 || static_cast<std::size_t>(i) >= num_roots)
      throw DomainError("root index " + std::to_string(i) + " out of range [0, " +
                        std::to_string(num_roots - 1) + "]");
    bits |= std::uint64_t{1} << i;
  }
  return RootSubset(bits);
}

inline void print_value(std::ostream& out, const Options& o, const std::string& value) {
  if (o.json)
    out << Json{{"value", value}}.dump() << '\n';
  else
    out << value << '\n';
}

inline void print_table(std::ostream& out, const Options& o, const DecompositionTable& table) {
  if (o.json) {
    out << to_json(table).dump() << '\n';
    return;
  }
  for (auto it = table.rbegin(); it != table.rend(); ++it)
    out << format_weight(it->first) << ' ' << to_string(it->second) << '\n';
}

inline void check(bool agree, const std::string& what) {
  if (!agree) throw Disagreement(what);
}

inline Partition polynomial_partition(const Weight& w, const char* name) {
  for (int x : w.coords())
    if (x < 0) throw DomainError(std::string("the character cross-check needs nonnegative parts in ") + name);
  return Partition::from_weight(w);
}

inline void cmd_kostant(const Options& o, std::ostream& out) {
  const Weight mu = weight_arg(o.mu, "mu");
  const RootSystemA rs = system_for(o, mu.size());
  BigInt v;
  if (o.distinct) {
    v = subset_sum_P(rs, mu);
  } else if (!o.roots.empty()) {
    v = kostant_restricted(rs, subset_arg(o.roots, rs.num_positive()), mu);
  } else {
    v = kostant(rs, mu);
  }
  if (o.oracle && o.roots.empty() && !o.distinct) {
    const BigInt at_one = kostant_q(rs, mu).evaluate(1);
    check(at_one == v, "K_q(1) = " + to_string(at_one) + " but K = " + to_string(v));
  }
  print_value(out, o, to_string(v));
}

inline void cmd_kostant_q(const Options& o, std::ostream& out) {
  const Weight mu = weight_arg(o.mu, "mu");
  const RootSystemA rs = system_for(o, mu.size());
  QPolynomial p;
  if (o.classical)
    p = kostant_q_classical(rs, mu);
  else if (o.inclusion_exclusion)
    p = kq_inclusion_exclusion(rs, mu);
  else
    p = kostant_q(rs, mu);
  if (o.oracle) {
    check(p.evaluate(1) == kostant(rs, mu), "K_q(1) differs from K");
    if (!o.classical && rs.rank() <= 3) {
      const QPolynomial other = o.inclusion_exclusion ? kostant_q(rs, mu) : kq_inclusion_exclusion(rs, mu);
      check(other == p, "inclusion-exclusion gives " + other.to_string() + ", enumeration gives " + p.to_string());
    }
  }
  if (o.q) {
    print_value(out, o, to_string(p.evaluate(BigInt(*o.q))));
  } else if (o.json) {
    out << Json{{"polynomial", to_json(p)}}.dump() << '\n';
  } else {
    out << p.to_string() << '\n';
  }
}

inline void cmd_mult(const Options& o, std::ostream& out) {
  const Weight lambda = weight_arg(o.lambda, "lambda");
  const RootSystemA rs = system_for(o, lambda.size());
  const std::string nu_text = !o.nu.empty() ? o.nu : o.beta;
  if (nu_text.empty()) {
    if (o.classical) throw UsageError("--classical needs --nu");
    const auto table = twisted_weight_table(rs, lambda);
    if (o.oracle) {
      const CharacterPoly chi = twisted_character(polynomial_partition(lambda, "lambda"), rs.size_k());
      BigInt total = 0;
      for (const auto& [nu, m] : table) {
        check(weight_coeff(chi, nu) == m, "character coefficient differs at " + format_weight(nu));
        total += m;
      }
      check(total == chi.evaluate_at_ones(), "weight multiplicities do not add up to the dimension");
    }
    print_table(out, o, table);
    return;
  }
  const Weight nu = weight_arg(nu_text, "nu");
  rs.check_weight(nu);
  if (o.classical) {
    const BigInt m = classical_weight_multiplicity(rs, lambda, nu);
    if (o.oracle) {
      const CharacterPoly s = schur(polynomial_partition(lambda, "lambda"), rs.size_k());
      check(weight_coeff(s, nu) == m, "Schur coefficient is " + to_string(weight_coeff(s, nu)));
    }
    print_value(out, o, to_string(m));
    return;
  }
  const BigInt m = twisted_weight_multiplicity(rs, lambda, nu);
  if (o.oracle) {
    const Partition p = polynomial_partition(lambda, "lambda");
    const BigInt c = weight_coeff(twisted_character(p, rs.size_k()), nu);
    check(c == m, "character coefficient is " + to_string(c) + ", alternating sum gives " + to_string(m));
    const BigInt g = twisted_mult_via_gt(p, rs.size_k(), nu);
    check(g == m, "GT count is " + to_string(g) + ", alternating sum gives " + to_string(m));
  }
  print_value(out, o, to_string(m));
}

inline void cmd_tensor(const Options& o, std::ostream& out) {
  const Weight lambda = weight_arg(o.lambda, "lambda");
  const Weight mu = weight_arg(o.mu, "mu");
  const RootSystemA rs = system_for(o, lambda.size());
  rs.check_weight(mu);
  if (o.nu.empty()) {
    const DecompositionTable table = twisted_tensor_table(rs, lambda, mu);
    if (o.oracle) {
      SchurCache cache;
      const std::size_t k = rs.size_k();
      const CharacterPoly lhs = cache.twisted(Partition::from_weight(lambda), k) * cache.twisted(Partition::from_weight(mu), k);
      CharacterPoly rhs(k);
      for (const auto& [nu, c] : table) rhs += c * cache.twisted(Partition::from_weight(nu), k);
      check(lhs == rhs, "character identity fails");
    }
    print_table(out, o, table);
    return;
  }
  const Weight nu = weight_arg(o.nu, "nu");
  rs.check_weight(nu);
  const BigInt n = twisted_tensor_multiplicity(rs, lambda, mu, nu);
  if (o.oracle) {
    const BigInt m = twisted_tensor_via_irreducibles(rs, lambda, mu, nu);
    check(m == n, "irreducible route gives " + to_string(m) + ", alternating sum gives " + to_string(n));
  }
  print_value(out, o, to_string(n));
}

inline void cmd_decompose(const Options& o, std::ostream& out) {
  const Weight lambda = weight_arg(o.lambda, "lambda");
  const RootSystemA rs = system_for(o, lambda.size());
  const TwistedDecomposition d = decompose_twisted(rs, lambda);
  if (o.oracle) {
    SchurCache cache;
    const std::size_t k = rs.size_k();
    CharacterPoly rhs(k);
    for (const auto& [mu, c] : d.table) rhs += c * cache.schur(polynomial_partition(mu, "mu"), k);
    check(rhs == cache.twisted(polynomial_partition(lambda, "lambda"), k), "character identity fails");
  }
  if (o.json) {
    Json failing = Json::array();
    for (const auto& I : d.non_dominant) failing.push_back(Json(I.indices()));
    out << Json{{"subset_formula_holds", d.subset_formula_holds},
                {"non_dominant_subsets", failing},
                {"table", to_json(d.table)}}
               .dump()
        << '\n';
    return;
  }
  if (!d.subset_formula_holds)
    out << "# " << d.non_dominant.size()
        << " subsets I give a non-dominant lambda - alpha_I; table read off the character\n";
  print_table(out, o, d.table);
}

inline void cmd_branch(const Options& o, std::ostream& out) {
  const Weight lambda = weight_arg(o.lambda, "lambda");
  const RootSystemA rs = system_for(o, lambda.size());
  const Partition p = polynomial_partition(lambda, "lambda");
  const auto terms = branch(p, rs.size_k());
  if (o.oracle) {
    BigInt total = 0;
    for (const auto& t : terms) total += t.coefficient * twisted_dim_via_gt(t.nu, rs.size_k() - 1);
    check(total == twisted_dimension(rs, lambda), "restricted dimensions do not add up");
  }
  if (o.json) {
    Json j = Json::array();
    for (const auto& t : terms) j.push_back(Json{{"weight", format_weight(t.nu.to_weight())}, {"mult", to_string(t.coefficient)}});
    out << j.dump() << '\n';
    return;
  }
  for (const auto& t : terms) out << format_weight(t.nu.to_weight()) << ' ' << to_string(t.coefficient) << '\n';
}

inline void cmd_gt(const Options& o, std::ostream& out) {
  const Weight lambda = weight_arg(o.lambda, "lambda");
  const std::size_t k = lambda.size();
  if (o.size > 0 && static_cast<std::size_t>(o.size) != k) throw DomainError("-k does not match the length of --lambda");
  const Partition p = polynomial_partition(lambda, "lambda");
  if (o.count_only) {
    std::size_t count = 0;
    for_each_gt(p, k, [&](const GTDiagram&) { ++count; });
    print_value(out, o, std::to_string(count));
    return;
  }
  const auto diagrams = enumerate_gt(p, k);
  if (o.json) {
    Json j = Json::array();
    for (const auto& d : diagrams) j.push_back(to_json(d));
    out << j.dump() << '\n';
    return;
  }
  for (const auto& d : diagrams) {
    std::string rows;
    for (const auto& r : d.rows()) rows += (rows.empty() ? "" : " / ") + format_weight(Weight(r));
    out << rows << "  nabla=" << d.nabla_total() << " weight=" << format_weight(gt_weight(d)) << '\n';
  }
}

inline void cmd_dim(const Options& o, std::ostream& out) {
  const Weight lambda = weight_arg(o.lambda, "lambda");
  const RootSystemA rs = system_for(o, lambda.size());
  const BigInt d = twisted_dimension(rs, lambda);
  if (o.oracle) {
    const BigInt g = twisted_dim_via_gt(polynomial_partition(lambda, "lambda"), rs.size_k());
    check(g == d, "GT diagrams give " + to_string(g));
  }
  print_value(out, o, to_string(d));
}

inline void cmd_chamber_a2(const Options& o, std::ostream& out) {
  const Weight mu = weight_arg(o.mu, "mu");
  if (mu.size() != 3) throw DomainError("chamber-a2 needs a weight with three coordinates");
  if (o.rank > 0 && o.rank != 2) throw DomainError("chamber-a2 is rank 2 only");
  const QPolynomial p = a2_closed_form(mu);
  const int cell = a2_cell(to_root_coords(mu));
  if (o.oracle) {
    const QPolynomial direct = kostant_q(RootSystemA(2), mu);
    check(direct == p, "enumeration gives " + direct.to_string() + ", closed form gives " + p.to_string());
  }
  const std::string label = cell ? "tau" + std::to_string(cell) : "outside";
  if (o.json) {
    Json j{{"cell", label}, {"polynomial", to_json(p)}};
    if (o.q) j["value"] = to_string(p.evaluate(BigInt(*o.q)));
    out << j.dump() << '\n';
    return;
  }
  out << label << ' ' << (o.q ? to_string(p.evaluate(BigInt(*o.q))) : p.to_string()) << '\n';
}

inline RootMatrix matrix_arg(const Options& o) {
  if (o.matrix.empty()) {
    if (o.rank < 1) throw UsageError("unimodular needs -n or --matrix");
    return root_matrix(o.rank);
  }
  std::vector<std::vector<int>> rows;
  std::stringstream ss(o.matrix);
  std::string row;
  try {
    while (std::getline(ss, row, ';')) rows.push_back(parse_int_list(row));
    return RootMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--matrix: ") + e.what());
  }
}

inline void cmd_unimodular(const Options& o, std::ostream& out) {
  if (o.rank > 6) throw DomainError("unimodularity check supports n <= 6");
  const RootMatrix M = matrix_arg(o);
  const bool u = is_unimodular(M);
  if (o.json)
    out << Json{{"unimodular", u}, {"bases", bases(M).size()}}.dump() << '\n';
  else
    out << (u ? "true" : "false") << '\n';
}

inline Json chamber_report(const Chamber& c, const ChamberPolynomial& p) {
  return Json{{"signature", to_json(c.signature)},
              {"dimension", c.dimension},
              {"representative", format_weight(Weight(kostantq::detail::integral_point(c.representatives.front())))},
              {"polynomial", to_json(p)}};
}

inline void cmd_fit(const Options& o, std::ostream& out) {
  if (o.rank != 2 && o.rank != 3) throw DomainError("fit supports -n 2 or -n 3");
  if (o.box < 1 || o.box > 12) throw DomainError("--box must lie in [1, 12]");
  const RootSystemA rs(o.rank);
  const ChamberComplex cx(root_matrix(o.rank));

  if (!o.roots.empty()) {
    const CoarseningReport report = coarsening_witness(rs, subset_arg(o.roots, rs.num_positive()), o.box);
    if (o.json) {
      Json j = Json::array();
      for (const auto& c : report.cells) {
        Json e{{"signature", to_json(c.signature)}, {"dimension", c.dimension}, {"points", c.points_checked}, {"consistent", c.consistent}};
        if (c.polynomial) e["polynomial"] = to_json(*c.polynomial);
        j.push_back(std::move(e));
      }
      out << Json{{"passed", report.passed()}, {"cells", j}}.dump() << '\n';
    } else {
      for (const auto& c : report.cells)
        out << "dim=" << c.dimension << " points=" << c.points_checked << ' '
            << (c.consistent ? c.polynomial->to_string() : "INCONSISTENT " + c.detail) << '\n';
      out << (report.passed() ? "coarsening holds" : "coarsening fails") << '\n';
    }
    if (!report.passed()) throw Disagreement("K_J is not polynomial on some cell");
    return;
  }

  std::vector<Chamber> cells;
  if (!o.point.empty()) {
    SimpleCoords a;
    try {
      a = parse_int_list(o.point);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--point: ") + e.what());
    }
    if (a.size() != static_cast<std::size_t>(o.rank)) throw DomainError("--point needs " + std::to_string(o.rank) + " coordinates");
    cells.push_back(cx.cell_of(a, o.box));
  } else {
    cells = cx.discover(o.box);
  }
  Json reports = Json::array();
  for (const auto& c : cells) {
    const ChamberPolynomial p = fit_chamber_polynomial(cx, c, rs);
    if (o.json) {
      reports.push_back(chamber_report(c, p));
    } else {
      out << "dim=" << c.dimension << " rep="
          << format_weight(Weight(kostantq::detail::integral_point(c.representatives.front()))) << "  "
          << p.to_string() << '\n';
    }
  }
  if (o.json) out << reports.dump() << '\n';
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kostant partition functions and twisted type-A multiplicities", "kostantq"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  Options o;

  auto add_common = [&](CLI::App* s) {
    s->add_flag("--json", o.json, "Machine-readable output");
    s->add_flag("--oracle", o.oracle, "Cross-check against an independent route (exit 3 on disagreement)");
  };
  auto add_rank = [&](CLI::App* s) {
    s->add_option("-n,--rank", o.rank, "Rank n of A_n")->check(CLI::Range(1, 64));
    s->add_option("-k,--gl", o.size, "Size k = n + 1 of gl_k")->check(CLI::Range(2, 65));
  };

  struct Command {
    CLI::App* app;
    std::function<void(const Options&, std::ostream&)> fn;
  };
  std::vector<Command> commands;

  {
    auto* s = app.add_subcommand("kostant", "Kostant partition function K(mu)");
    add_rank(s);
    add_common(s);
    s->add_option("--mu", o.mu, "Weight, comma-separated e-coordinates")->required();
    s->add_option("--roots", o.roots, "Restrict to these root indices (K_J); 'none' for the empty set");
    s->add_flag("--distinct", o.distinct, "Count sums using each positive root at most once (P)");
    commands.push_back({s, detail::cmd_kostant});
  }
  {
    auto* s = app.add_subcommand("kostant-q", "q-analogue K_q(mu)");
    add_rank(s);
    add_common(s);
    s->add_option("--mu", o.mu, "Weight")->required();
    s->add_option("--q", o.q, "Evaluate at this integer q");
    s->add_flag("--classical", o.classical, "Grade by total number of roots instead");
    s->add_flag("--inclusion-exclusion", o.inclusion_exclusion, "Compute from restricted partition functions (n <= 3)");
    commands.push_back({s, detail::cmd_kostant_q});
  }
  {
    auto* s = app.add_subcommand("mult", "Weight multiplicity of a twisted representation");
    add_rank(s);
    add_common(s);
    s->add_option("--lambda", o.lambda, "Strictly dominant highest weight")->required();
    s->add_option("--nu", o.nu, "Weight (omit for the full table)");
    s->add_option("--beta", o.beta, "Alias for --nu");
    s->add_flag("--classical", o.classical, "Multiplicity in the irreducible V_lambda instead");
    commands.push_back({s, detail::cmd_mult});
  }
  {
    auto* s = app.add_subcommand("tensor", "Multiplicity of V~_nu in V~_lambda (x) V~_mu");
    add_rank(s);
    add_common(s);
    s->add_option("--lambda", o.lambda, "Strict highest weight")->required();
    s->add_option("--mu", o.mu, "Strict highest weight")->required();
    s->add_option("--nu", o.nu, "Strict highest weight (omit for the full table)");
    commands.push_back({s, detail::cmd_tensor});
  }
  {
    auto* s = app.add_subcommand("decompose", "Decompose V~_lambda into irreducibles");
    add_rank(s);
    add_common(s);
    s->add_option("--lambda", o.lambda, "Strictly dominant highest weight")->required();
    commands.push_back({s, detail::cmd_decompose});
  }
  {
    auto* s = app.add_subcommand("branch", "Restrict V~_lambda from gl_k to gl_{k-1}");
    add_rank(s);
    add_common(s);
    s->add_option("--lambda", o.lambda, "Strict partition")->required();
    commands.push_back({s, detail::cmd_branch});
  }
  {
    auto* s = app.add_subcommand("gt", "List twisted Gelfand-Tsetlin diagrams with top row lambda");
    add_rank(s);
    add_common(s);
    s->add_option("--lambda", o.lambda, "Strict partition")->required();
    s->add_flag("--count", o.count_only, "Print only the number of diagrams");
    commands.push_back({s, detail::cmd_gt});
  }
  {
    auto* s = app.add_subcommand("dim", "Dimension of V~_lambda");
    add_rank(s);
    add_common(s);
    s->add_option("--lambda", o.lambda, "Strictly dominant highest weight")->required();
    commands.push_back({s, detail::cmd_dim});
  }
  {
    auto* s = app.add_subcommand("chamber-a2", "Closed form of K_q on the A_2 chamber complex");
    s->add_option("-n,--rank", o.rank, "Rank (must be 2)");
    add_common(s);
    s->add_option("--mu", o.mu, "Weight (mu1,mu2,mu3) of trace 0")->required();
    s->add_option("--q", o.q, "Evaluate at this integer q");
    commands.push_back({s, detail::cmd_chamber_a2});
  }
  {
    auto* s = app.add_subcommand("unimodular", "Check that all maximal minors lie in {0, 1, -1}");
    s->add_option("-n,--rank", o.rank, "Use the root matrix of A_n")->check(CLI::Range(1, 64));
    s->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','");
    s->add_flag("--json", o.json, "Machine-readable output");
    commands.push_back({s, detail::cmd_unimodular});
  }
  {
    auto* s = app.add_subcommand("fit", "Fit K_q on the cells of the chamber complex");
    s->add_option("-n,--rank", o.rank, "Rank, 2 or 3")->required();
    s->add_option("--box", o.box, "Sample lattice points in [0, box]^n");
    s->add_option("--point", o.point, "Only the cell containing this point (simple-root coordinates)");
    s->add_option("--roots", o.roots, "Check that K_J is polynomial on every cell instead");
    s->add_flag("--json", o.json, "Machine-readable output");
    commands.push_back({s, detail::cmd_fit});
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (args.empty() || e.get_name() == "RequiredError" || e.get_name() == "ExtrasError")
      err << app.help();
    return kExitUsage;
  }

  try {
    for (const auto& c : commands)
      if (c.app->parsed()) c.fn(o, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Disagreement& e) {
    err << "cross-check failed: " << e.what() << '\n';
    return kExitDisagree;
  } catch (const FitError& e) {
    err << "fit failed: " << e.what() << '\n';
    return kExitDisagree;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace kostantq::cli
