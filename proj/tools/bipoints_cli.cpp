// bipoints: separators, degree sets, and Hilbert functions for finite point
// sets in P^1 x P^1, with an exhaustive ACM census.
//
// Exit codes: 0 success, 1 verification/domain failure, 2 input error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bipoints/combinatorics.hpp"
#include "bipoints/field.hpp"
#include "bipoints/harness.hpp"
#include "bipoints/io.hpp"
#include "bipoints/separators.hpp"

namespace {

using namespace bipoints;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string field = "rational";
  std::string file;
  std::string command;
  std::size_t point_index = 0;
  bool have_point = false;
  int deg_i = 0, deg_j = 0;
  int max_i = 2, max_j = 2;
  std::size_t rows = 2, cols = 2, n_points = 1;
  std::size_t cell_limit = 16;
  std::uint64_t seed = 0;
  std::string scheme = "generic";
  bool acm_only = false;
};

json base_output(const Options& opt, const std::string& field_name, const std::string& digest) {
  return {{"command", opt.command},
          {"version", kToolVersion},
          {"field", field_name},
          {"input_digest", digest}};
}

template <class K>
const BiPoint<K>& point_at(const PointSet<K>& x, std::size_t index) {
  if (index >= x.size()) throw IndexOutOfRange();
  return x.point(index);
}

template <class K>
int cmd_check(const Options& opt) {
  const std::string text = read_file(opt.file);
  const PointSet<K> x = to_pointset<K>(parse_input(text));
  const auto [verdict, witness] = acm_verdict(x);
  json out = base_output(opt, FieldTraits<K>::name(), fnv1a_digest(text));
  out["result"] = {{"acm", verdict.is_acm}, {"points", x.size()}};
  if (witness)
    out["result"]["witness"] =
        json::array({bipoint_to_json(witness->first), bipoint_to_json(witness->second)});
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

template <class K>
int cmd_degrees(const Options& opt) {
  const std::string text = read_file(opt.file);
  const PointSet<K> x = to_pointset<K>(parse_input(text));
  json out = base_output(opt, FieldTraits<K>::name(), fnv1a_digest(text));
  if (opt.have_point) {
    const auto& p = point_at(x, opt.point_index);
    const DegreeSet ds = degree_set(x, p);
    out["result"] = {{"index", opt.point_index},
                     {"point", bipoint_to_json(p)},
                     {"degree_set", degree_set_to_json(ds)},
                     {"singleton", ds.size() == 1}};
  } else {
    const TheoremReport rep = verify_main_theorem(x);
    json pts = json::array();
    for (const auto& rec : rep.details)
      pts.push_back({{"index", rec.index},
                     {"point", bipoint_to_json(x.point(rec.index))},
                     {"degree_set", degree_set_to_json(rec.degrees)},
                     {"singleton", rec.singleton}});
    out["result"] = {{"points", pts},
                     {"acm", rep.acm_combinatorial},
                     {"all_singletons", rep.all_singletons},
                     {"consistent", rep.consistent}};
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

template <class K>
int cmd_separator(const Options& opt) {
  const std::string text = read_file(opt.file);
  const PointSet<K> x = to_pointset<K>(parse_input(text));
  const auto& p = point_at(x, opt.point_index);
  const Bidegree d{opt.deg_i, opt.deg_j};
  const BiForm<K> f = extract_separator(x, p, d);

  bool vanishes = true;
  for (const auto& q : x.points())
    if (!(q == p) && !FieldTraits<K>::is_zero(evaluate(f, q))) vanishes = false;

  json out = base_output(opt, FieldTraits<K>::name(), fnv1a_digest(text));
  out["result"] = {{"index", opt.point_index},
                   {"point", bipoint_to_json(p)},
                   {"separator", biform_to_json(f)},
                   {"value_at_point", FieldTraits<K>::to_string(evaluate(f, p))},
                   {"vanishes_elsewhere", vanishes}};
  std::cout << out.dump(2) << "\n";
  return vanishes ? kExitOk : kExitVerification;
}

template <class K>
int cmd_hilbert(const Options& opt) {
  const std::string text = read_file(opt.file);
  const PointSet<K> x = to_pointset<K>(parse_input(text));
  const HilbertTable t = hilbert_table(x, opt.max_i, opt.max_j);
  json rows = json::array();
  for (int i = 0; i <= t.max_i; ++i) {
    json row = json::array();
    for (int j = 0; j <= t.max_j; ++j) row.push_back(t.at(i, j));
    rows.push_back(row);
  }
  json out = base_output(opt, FieldTraits<K>::name(), fnv1a_digest(text));
  out["result"] = {{"max_i", t.max_i}, {"max_j", t.max_j}, {"values", rows}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

template <class K>
int cmd_census(const Options& opt) {
  const CensusSummary s =
      census<K>(opt.rows, opt.cols, scheme_from_name(opt.scheme), opt.cell_limit);
  json out = base_output(opt, FieldTraits<K>::name(), "");
  out["result"] = {{"rows", s.rows},       {"cols", s.cols},
                   {"scheme", s.scheme},   {"total", s.total},
                   {"acm", s.acm},         {"acm_chain", s.acm_chain},
                   {"mismatches", s.mismatches}, {"elapsed_ms", s.elapsed_ms}};
  std::cout << out.dump(2) << "\n";
  return s.mismatches == 0 ? kExitOk : kExitVerification;
}

template <class K>
int cmd_random(const Options& opt) {
  const CoordinateScheme scheme = scheme_from_name(opt.scheme);
  PointSet<K> x = opt.acm_only ? random_acm_pointset<K>(opt.rows, opt.cols, opt.seed, scheme)
                               : random_pointset<K>(opt.rows, opt.cols, opt.n_points, opt.seed,
                                                    scheme);
  std::ostringstream header;
  header << "bipoints random: rows=" << opt.rows << " cols=" << opt.cols << " seed=" << opt.seed
         << " scheme=" << opt.scheme << " prng=" << kPrngName << (opt.acm_only ? " acm=1" : "");
  std::cout << pointset_to_text(x, header.str());
  return kExitOk;
}

template <class K>
int cmd_staircase(const Options& opt) {
  const std::string text = read_file(opt.file);
  const PointSet<K> x = to_pointset<K>(parse_input(text));
  const IncidenceGrid g = incidence(x);
  const AcmVerdict v = is_acm_pairwise(g);
  if (!v.is_acm) {
    const auto [c1, c2] = *v.witness;
    std::cerr << "NotAcm: witness cells (" << c1.first << "," << c1.second << ") and ("
              << c2.first << "," << c2.second << ")\n";
    return kExitVerification;
  }
  for (const std::string& line : render_staircase(g)) std::cout << line << "\n";
  return kExitOk;
}

// Full invariant battery on one input; nonzero exit on any failure.
template <class K>
int cmd_verify(const Options& opt) {
  const std::string text = read_file(opt.file);
  const PointSet<K> x = to_pointset<K>(parse_input(text));
  const std::size_t n = x.size();
  const int r = static_cast<int>(x.pi1().size());
  const int s = static_cast<int>(x.pi2().size());

  json checks = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"pass", ok}});
    all_ok = all_ok && ok;
  };

  const TheoremReport rep = verify_main_theorem(x);
  record("main_theorem_consistency", rep.consistent);
  record("pairwise_chain_agreement", rep.acm_combinatorial == is_acm_chain(incidence(x)));

  {  // HF monotone in each argument, bounded by |X| and (i+1)(j+1)
    const HilbertTable t = hilbert_table(x, r, s);
    bool mono = true, bound = true;
    for (int i = 0; i <= t.max_i; ++i)
      for (int j = 0; j <= t.max_j; ++j) {
        if (i > 0 && t.at(i, j) < t.at(i - 1, j)) mono = false;
        if (j > 0 && t.at(i, j) < t.at(i, j - 1)) mono = false;
        const std::size_t cap = std::min(n, static_cast<std::size_t>(i + 1) * (j + 1));
        if (t.at(i, j) > cap) bound = false;
      }
    record("hilbert_monotone", mono);
    record("hilbert_bounded", bound);
  }

  record("hilbert_saturation",
         hilbert_function(x, {static_cast<int>(n) - 1, static_cast<int>(n) - 1}) == n);

  {  // HF drop on point removal is 0 or 1; up-set property of existence
    bool drop_ok = true, upset_ok = true, anchors_ok = true, box_ok = true;
    const HilbertTable hf_x = hilbert_table(x, r - 1, s - 1);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& p = x.point(k);
      const PointSet<K> rest = x.without(p);
      std::vector<std::vector<bool>> exists(r, std::vector<bool>(s));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) {
          const std::size_t hx = hf_x.at(i, j);
          const std::size_t hr = hilbert_function(rest, {i, j});
          if (hx != hr && hx != hr + 1) drop_ok = false;
          exists[i][j] = hx == hr + 1;
        }
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j)
          if (exists[i][j]) {
            if (i + 1 < r && !exists[i + 1][j]) upset_ok = false;
            if (j + 1 < s && !exists[i][j + 1]) upset_ok = false;
          }
      const auto b = x.row_count(p);
      const auto a = x.col_count(p);
      if (!separator_exists(x, p, {r - 1, static_cast<int>(b) - 1})) anchors_ok = false;
      if (!separator_exists(x, p, {static_cast<int>(a) - 1, s - 1})) anchors_ok = false;
      if (a == 1 && b == 1) {
        if (!separator_exists(x, p, {r - 1, 0})) anchors_ok = false;
        if (!separator_exists(x, p, {0, s - 1})) anchors_ok = false;
      }
      if (degree_set_on_box(x, p, r - 1, s - 1) != degree_set_on_box(x, p, r + 1, s + 1))
        box_ok = false;
    }
    record("hilbert_drop_zero_or_one", drop_ok);
    record("separator_existence_upset", upset_ok);
    record("existence_anchors", anchors_ok);
    record("box_sufficiency", box_ok);
  }

  if (rep.acm_combinatorial) {
    bool formula_ok = verify_acm_formula(x).ok;
    record("acm_degree_formula", formula_ok);
  }

  json out = base_output(opt, FieldTraits<K>::name(), fnv1a_digest(text));
  out["result"] = {{"checks", checks}, {"pass", all_ok}};
  std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitVerification;
}

template <class K>
int dispatch(const Options& opt) {
  if (opt.command == "check") return cmd_check<K>(opt);
  if (opt.command == "degrees") return cmd_degrees<K>(opt);
  if (opt.command == "separator") return cmd_separator<K>(opt);
  if (opt.command == "hilbert") return cmd_hilbert<K>(opt);
  if (opt.command == "census") return cmd_census<K>(opt);
  if (opt.command == "random") return cmd_random<K>(opt);
  if (opt.command == "staircase") return cmd_staircase<K>(opt);
  if (opt.command == "verify") return cmd_verify<K>(opt);
  throw ParseError("unknown command");
}

int run(const Options& opt) {
  if (opt.field == "rational") return dispatch<Rational>(opt);
  if (opt.field.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(opt.field.substr(3));
    } catch (const std::exception&) {
      throw BadField("bad prime in '" + opt.field + "'");
    }
    if (p <= 1000000) throw BadField("prime must exceed 10^6");
    if (!is_probable_prime(p)) throw BadField(std::to_string(p) + " is not prime");
    Fp::set_modulus(p);
    return dispatch<Fp>(opt);
  }
  throw BadField("unknown field '" + opt.field + "' (use `rational` or `fp:<prime>`)");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"separators and ACM classification for points in P^1 x P^1"};
  app.require_subcommand(1);
  app.add_option("--field", opt.field, "rational (default) or fp:<prime>, prime > 10^6");

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "input file (points or 0/1 grid)")->required();
  };

  auto* check = app.add_subcommand("check", "ACM verdict with witness");
  add_file(check);

  auto* degrees = app.add_subcommand("degrees", "separator-degree sets per point");
  add_file(degrees);
  auto* point_opt = degrees->add_option("--point", opt.point_index, "single point index");

  auto* separator = app.add_subcommand("separator", "explicit separator form");
  add_file(separator);
  separator->add_option("--point", opt.point_index)->required();
  separator->add_option("--deg-i", opt.deg_i)->required();
  separator->add_option("--deg-j", opt.deg_j)->required();

  auto* hilbert = app.add_subcommand("hilbert", "bigraded Hilbert table");
  add_file(hilbert);
  hilbert->add_option("--max-i", opt.max_i);
  hilbert->add_option("--max-j", opt.max_j);

  auto* census = app.add_subcommand("census", "exhaustive main-theorem census");
  census->add_option("--rows", opt.rows)->required();
  census->add_option("--cols", opt.cols)->required();
  census->add_option("--scheme", opt.scheme, "generic | infinity | entangled");
  census->add_option("--limit", opt.cell_limit, "max grid cells");

  auto* random = app.add_subcommand("random", "seeded random point-set file to stdout");
  random->add_option("--rows", opt.rows)->required();
  random->add_option("--cols", opt.cols)->required();
  random->add_option("--points", opt.n_points);
  random->add_option("--seed", opt.seed)->required();
  random->add_option("--scheme", opt.scheme);
  random->add_flag("--acm", opt.acm_only, "sample a staircase (ACM) configuration");

  auto* verify = app.add_subcommand("verify", "full invariant battery on one input");
  add_file(verify);

  auto* staircase = app.add_subcommand("staircase", "Ferrers rendering of an ACM grid");
  add_file(staircase);

  CLI11_PARSE(app, argc, argv);
  opt.command = app.get_subcommands().front()->get_name();
  opt.have_point = point_opt->count() > 0;

  try {
    return run(opt);
  } catch (const bipoints::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const bipoints::DuplicatePoint& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const bipoints::IndexOutOfRange& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const bipoints::BadField& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const bipoints::TooManyPoints& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const bipoints::LimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const bipoints::NoSeparator& e) {
    std::cerr << e.what() << "\n";
    return kExitVerification;
  } catch (const bipoints::NotAcm& e) {
    std::cerr << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
