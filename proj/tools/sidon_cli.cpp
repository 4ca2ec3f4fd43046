// Command line front end: set analysis, exhaustive enumeration of maximal
// Sidon sets, bound tables, and a self-contained verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sidon/bounds.hpp"
#include "sidon/codes.hpp"
#include "sidon/enumerate.hpp"
#include "sidon/gf2.hpp"
#include "sidon/sidon.hpp"

namespace {

using namespace sidon;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

std::vector<vec_t> parse_set_literal(const std::string& text, int dim) {
  std::vector<vec_t> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size())
      throw error(errc::bad_value, "cannot parse '" + token + "' as a nonnegative integer");
    if (v > space_mask(dim))
      throw error(errc::bad_value, "element '" + token + "' is not below 2^" + std::to_string(dim));
    values.push_back(static_cast<vec_t>(v));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
      flush();
    else
      token.push_back(c);
  }
  flush();
  return values;
}

std::string join_decimals(const std::vector<vec_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string bits_of(vec_t v, int dim) {
  std::string s;
  for (int i = 0; i < dim; ++i) s.push_back(((v >> i) & 1) ? '1' : '0');
  return s;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

int cmd_check(int dim, const std::string& literal, bool as_json, bool bits, bool matrix) {
  const point_set m(dim, parse_set_literal(literal, dim));
  const sidon_report rep = analyze(m);

  std::optional<code_view> code;
  std::optional<int> radius;
  if (!m.contains(0) && !m.empty()) {
    code_view c;
    c.n = m.size();
    c.t = dim;
    c.k = c.n - span_dim(m);
    c.columns = m;
    c.d = min_distance_class(m);
    if (span_dim(m) == dim) {
      try {
        radius = covering_radius(m);
      } catch (const error& e) {
        if (e.code() != errc::cap_exceeded) throw;
      }
    }
    code = std::move(c);
  }

  if (as_json) {
    nlohmann::json j;
    j["dim"] = dim;
    j["size"] = m.size();
    j["set"] = m.elems;
    j["is_sidon"] = rep.is_sidon;
    j["is_sum_free"] = rep.is_sum_free;
    j["is_maximal_sidon"] = rep.is_maximal_sidon;
    j["two_star_count"] = rep.two_star_count;
    j["three_sum_count"] = rep.three_sum_count;
    j["candidate_count"] = rep.candidate_count;
    if (code) {
      nlohmann::json jc;
      jc["n"] = code->n;
      jc["k"] = code->k;
      jc["d_class"] = to_string(code->d);
      if (radius) jc["covering_radius"] = *radius;
      jc["columns"] = code->columns.elems;
      if (matrix) jc["check_matrix"] = check_matrix_rows(m);
      j["code"] = std::move(jc);
    }
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }

  std::cout << "dim=" << dim << "\n";
  std::cout << "size=" << m.size() << "\n";
  std::cout << "set=" << join_decimals(m.elems) << "\n";
  if (bits) {
    std::string line;
    for (std::size_t i = 0; i < m.elems.size(); ++i) {
      if (i) line += ',';
      line += bits_of(m.elems[i], dim);
    }
    std::cout << "set_bits=" << line << "\n";
  }
  std::cout << "is_sidon=" << yesno(rep.is_sidon) << "\n";
  std::cout << "is_sum_free=" << yesno(rep.is_sum_free) << "\n";
  std::cout << "is_maximal_sidon=" << yesno(rep.is_maximal_sidon) << "\n";
  std::cout << "two_star_count=" << rep.two_star_count << "\n";
  std::cout << "three_sum_count=" << rep.three_sum_count << "\n";
  std::cout << "candidate_count=" << rep.candidate_count << "\n";
  if (code) {
    std::cout << "n=" << code->n << "\n";
    std::cout << "k=" << code->k << "\n";
    std::cout << "d_class=" << to_string(code->d) << "\n";
    if (radius) std::cout << "covering_radius=" << *radius << "\n";
    if (matrix) {
      const auto rows = check_matrix_rows(m);
      for (std::size_t i = 0; i < rows.size(); ++i)
        std::cout << "matrix_row_" << (i + 1) << "=" << rows[i] << "\n";
    }
  }
  return exit_ok;
}

std::optional<weight_class> parse_weight_class(const std::string& s) {
  if (s == "W4") return weight_class::w4;
  if (s == "W5") return weight_class::w5;
  if (s == "W6") return weight_class::w6;
  if (s == "W7") return weight_class::w7;
  if (s == "W8") return weight_class::w8;
  return std::nullopt;
}

int default_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("SIDON_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // library default: hardware concurrency
}

int cmd_enumerate(int dim, const std::string& wclass_name, int workers,
                  const std::string& witness_path, bool allow_long_run) {
  std::optional<weight_class> wc;
  if (!wclass_name.empty()) {
    wc = parse_weight_class(wclass_name);
    if (!wc) {
      std::cerr << "error: unknown weight class '" << wclass_name << "' (use W4..W8)\n";
      return exit_usage;
    }
  }
  const bool long_run = dim > 8 || (dim == 8 && (!wc || *wc == weight_class::w8));
  if (long_run && !allow_long_run) {
    std::cerr << "error: this run can take a very long time; pass --allow-long-run to proceed\n";
    return exit_usage;
  }

  std::ofstream witness_file;
  enum_options opt;
  opt.wclass = wc;
  opt.workers = default_workers(workers);
  if (!witness_path.empty()) {
    witness_file.open(witness_path);
    if (!witness_file) {
      std::cerr << "error: cannot open '" << witness_path << "' for writing\n";
      return exit_usage;
    }
    opt.witness_stream = &witness_file;
  }

  const enum_result r = enumerate_maximal(dim, opt);

  std::cout << "dim=" << dim << "\n";
  if (wc) std::cout << "weight_class=" << to_string(*wc) << "\n";
  for (const auto& [size, count] : r.size_histogram)
    std::cout << "hist_" << size << "=" << count << "\n";
  for (const auto& [size, count] : r.distinct_per_size)
    std::cout << "distinct_" << size << "=" << count << "\n";
  for (const auto& [size, set] : r.example_per_size)
    std::cout << "example_" << size << "=" << join_decimals(set.elems) << "\n";
  std::cout << "nodes=" << r.nodes_visited << "\n";
  std::cout << "wall_time=" << r.wall_seconds << "s\n";
  return exit_ok;
}

int cmd_bounds(int t_min, int t_max) {
  if (t_min < 1 || t_min > t_max) {
    std::cerr << "error: need 1 <= t-min <= t-max\n";
    return exit_usage;
  }
  std::cout << "t,trivial,new_bound,bt93,F,a,b,lambda\n";
  for (int t = t_min; t <= t_max; ++t) {
    const bound_row row = bound_table_row(t);
    std::cout << t << ',' << row.trivial.str() << ',';
    if (row.new_bound) std::cout << row.new_bound->str();
    std::cout << ',';
    if (row.bt93) std::cout << row.bt93->str();
    std::cout << ',';
    if (t >= 6 && t % 2 == 0) {
      const lambda_case lc = lambda_breakdown(t);
      std::cout << lc.f.str() << ',' << lc.a.str() << ',' << lc.b << ',' << lc.lambda;
    } else {
      std::cout << ",,,";
    }
    std::cout << "\n";
  }
  return exit_ok;
}

// ----- verify ---------------------------------------------------------------

struct verify_outcome {
  std::string name;
  std::string status;  // PASS / FAIL / SKIPPED
  std::string expected;
  std::string actual;
};

class verifier {
 public:
  void check(const std::string& name, const std::string& expected, const std::string& actual) {
    rows_.push_back({name, expected == actual ? "PASS" : "FAIL", expected, actual});
  }
  void skip(const std::string& name, const std::string& expected) {
    rows_.push_back({name, "SKIPPED", expected, "-"});
  }

  int report() const {
    bool failed = false;
    for (const auto& r : rows_) {
      std::printf("%-7s %-34s expected=%s actual=%s\n", r.status.c_str(), r.name.c_str(),
                  r.expected.c_str(), r.actual.c_str());
      if (r.status == "FAIL") failed = true;
    }
    std::printf("%s\n", failed ? "VERIFY FAILED" : "VERIFY OK");
    return failed ? exit_verify_failed : exit_ok;
  }

 private:
  std::vector<verify_outcome> rows_;
};

const std::vector<std::pair<int, std::vector<vec_t>>>& canonical_sets() {
  static const std::vector<std::pair<int, std::vector<vec_t>>> sets = {
      {1, {0, 1}},
      {2, {0, 1, 2}},
      {3, {0, 1, 2, 4}},
      {4, {0, 1, 2, 4, 8, 15}},
      {5, {0, 1, 2, 4, 8, 16, 15}},
      {6, {0, 1, 2, 4, 8, 16, 32, 15, 51}},   // two disjoint weight-4 vectors
      {6, {0, 1, 2, 4, 8, 16, 32, 63}},        // the all-ones vector
  };
  return sets;
}

const std::vector<std::pair<int, std::vector<vec_t>>>& example_sets_dim78() {
  static const std::vector<std::pair<int, std::vector<vec_t>>> sets = {
      {7, {0, 1, 2, 4, 8, 16, 32, 64, 15, 60, 101, 87}},
      {8, {0, 1, 2, 4, 8, 16, 32, 64, 128, 29, 58, 116, 135, 223, 236}},
      {8, {0, 1, 2, 4, 8, 16, 32, 64, 128, 29, 58, 116, 232, 205, 135, 222}},
      {8, {0, 1, 2, 4, 8, 16, 32, 64, 128, 29, 58, 116, 232, 205, 135, 254, 91, 171}},
  };
  return sets;
}

template <typename Map>
std::string histogram_string(const Map& hist) {
  std::string s;
  for (const auto& [size, count] : hist) {
    if (!s.empty()) s += ' ';
    s += std::to_string(size) + ":" + std::to_string(count);
  }
  return s;
}

int cmd_verify(const std::string& level) {
  verifier v;

  {
    std::string expected = "2,3,4,6,7,9,8 all maximal";
    std::string actual;
    bool all_max = true;
    for (const auto& [dim, vals] : canonical_sets()) {
      point_set m(dim, vals);
      if (!actual.empty()) actual += ',';
      actual += std::to_string(m.size());
      all_max = all_max && is_maximal_sidon(m);
    }
    actual += all_max ? " all maximal" : " not all maximal";
    v.check("canonical-maximal-sets", expected, actual);
  }

  {
    const point_set m5(5, {0, 1, 2, 4, 8, 16, 15});
    const point_set m5p(5, {0, 1, 2, 4, 8, 16, 31});
    const point_set m6a(6, {0, 1, 2, 4, 8, 16, 32, 15, 51});
    const point_set m6a1(6, {0, 1, 2, 4, 8, 16, 32, 15, 60});
    const point_set m6a2(6, {0, 1, 2, 4, 8, 16, 32, 31, 39});
    int found = 0;
    for (const auto& [from, to] : {std::pair{m5p, m5}, {m6a1, m6a}, {m6a2, m6a}}) {
      const auto w = affine_equivalent(from, to);
      if (w && apply_affine(*w, from) == to) ++found;
    }
    v.check("canonical-equivalences", "3 witnesses", std::to_string(found) + " witnesses");
  }

  {
    std::string expected = "12,15,16,18 all maximal";
    std::string actual;
    bool all_max = true;
    for (const auto& [dim, vals] : example_sets_dim78()) {
      point_set m(dim, vals);
      if (!actual.empty()) actual += ',';
      actual += std::to_string(m.size());
      all_max = all_max && is_maximal_sidon(m);
    }
    actual += all_max ? " all maximal" : " not all maximal";
    v.check("example-sets-dim7-8", expected, actual);
  }

  {
    const std::map<int, std::string> expected_supports = {
        {2, "3"}, {3, "4"}, {4, "6"}, {5, "7"}, {6, "8 9"}};
    std::string expected, actual;
    for (const auto& [dim, support] : expected_supports) {
      const enum_result r = enumerate_maximal(dim);
      std::string got;
      for (const auto& [size, count] : r.size_histogram) {
        if (!got.empty()) got += ' ';
        got += std::to_string(size);
      }
      expected += "t" + std::to_string(dim) + ":{" + support + "} ";
      actual += "t" + std::to_string(dim) + ":{" + got + "} ";
    }
    v.check("enumeration-size-support", expected, actual);
  }

  {
    std::string actual;
    for (int t = 1; t <= 6; ++t) {
      if (!actual.empty()) actual += ',';
      actual += std::to_string(smax_search(t));
    }
    v.check("smax-dim1-6", "2,3,4,6,7,9", actual);
  }

  {
    const std::vector<std::string> expected = {"6", "8", "11", "16", "23", "32",
                                               "45", "64", "91", "128", "181", "256"};
    std::string want, got;
    for (int t = 4; t <= 15; ++t) {
      if (!want.empty()) want += ',', got += ',';
      want += expected[t - 4];
      got += trivial_bound(t).str();
    }
    v.check("trivial-bound-row", want, got);
  }

  {
    const std::vector<std::string> expected = {"10", "14", "21", "30", "43",
                                               "62", "90", "126", "180", "254"};
    std::string want, got;
    for (int t = 6; t <= 15; ++t) {
      if (!want.empty()) want += ',', got += ',';
      want += expected[t - 6];
      got += new_bound(t).str();
    }
    v.check("new-bound-row", want, got);
  }

  {
    struct row { int t; const char* f; const char* a; int b; int lambda; const char* n; const char* k; };
    const std::vector<row> expected = {
        {16, "362", "119", 1, 2, "360", "344"},    {18, "724", "240", 0, 1, "723", "705"},
        {20, "1448", "481", 1, 2, "1446", "1426"}, {22, "2896", "964", 0, 1, "2895", "2873"},
        {24, "5793", "1929", 2, 2, "5791", "5767"}, {26, "11585", "3860", 1, 2, "11583", "11557"},
    };
    const auto rows = cor19_table();
    std::string want, got;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const auto& e = expected[i];
      const auto& r = rows[i];
      auto fmt = [](int t, const std::string& f, const std::string& a, int b, int lambda,
                    const std::string& n, const std::string& k) {
        return std::to_string(t) + ":" + f + "/" + a + "/" + std::to_string(b) + "/" +
               std::to_string(lambda) + "/[" + n + "," + k + "] ";
      };
      want += fmt(e.t, e.f, e.a, e.b, e.lambda, e.n, e.k);
      got += fmt(r.t, r.f.str(), r.a.str(), r.b, r.lambda, r.n.str(), r.k.str());
    }
    v.check("lambda-case-table", want, got);
    // shortening the t=24 nonexistent code parameters by -1/-1 in reverse:
    // no [5791,5767,5] code also rules out [5792,5768,5]
    const auto& r24 = rows[4];
    v.check("lambda-table-extra-t24", "[5792,5768]",
            "[" + bigint(r24.n + 1).str() + "," + bigint(r24.k + 1).str() + "]");
  }

  {
    int held = 0, total = 0;
    for (int t = 6; t <= 64; t += 2) {
      ++total;
      if (proof_case_check(t).inequality_holds) ++held;
    }
    v.check("proof-chain-even-6-64", "30/30 hold",
            std::to_string(held) + "/" + std::to_string(total) + " hold");
  }

  {
    int ok = 0, total = 0;
    for (int t = 2; t <= 64; t += 2) {
      ++total;
      if (floor_equality_check(t)) ++ok;
    }
    v.check("floor-identity-even-2-64", "32/32 equal",
            std::to_string(ok) + "/" + std::to_string(total) + " equal");
  }

  {
    std::string actual;
    for (weight_class c : {weight_class::w4, weight_class::w5, weight_class::w6,
                           weight_class::w7, weight_class::w8}) {
      const weight_class_rule r = weight_class_constraints(8, c);
      if (!actual.empty()) actual += ' ';
      actual += to_string(c) + ":(" + std::to_string(r.anchor) + "," +
                std::to_string(r.max_other_weight) + ")";
    }
    v.check("weight-class-rules", "W4:(15,4) W5:(31,5) W6:(63,6) W7:(127,6) W8:(255,5)", actual);
  }

  if (level == "full") {
    const enum_result r = enumerate_maximal(7);
    v.check("dim7-histogram", "12:524160 (distinct 12:21840)",
            histogram_string(r.size_histogram) + " (distinct " +
                histogram_string(r.distinct_per_size) + ")");
    v.check("smax-dim7", "12", std::to_string(smax_search(7)));
  } else {
    v.skip("dim7-histogram", "12:524160 (distinct 12:21840)");
    v.skip("smax-dim7", "12");
  }

  return v.report();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sidon sets over F_2^t, their associated codes and size bounds"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "analyze one set");
  int check_dim = 0;
  std::string check_set, check_file;
  bool check_json = false, check_matrix_flag = false;
  std::string check_format = "decimal";
  check->add_option("--dim", check_dim, "ambient dimension t")->required();
  auto* set_opt = check->add_option("--set", check_set, "comma or space separated decimals");
  auto* file_opt = check->add_option("--file", check_file, "file with the same format");
  set_opt->excludes(file_opt);
  check->add_flag("--json", check_json, "machine readable output");
  check->add_option("--format", check_format, "decimal|bits")->check(CLI::IsMember({"decimal", "bits"}));
  check->add_flag("--matrix", check_matrix_flag, "also print the check matrix rows");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "enumerate maximal Sidon sets");
  int enum_dim = 0, enum_workers = 0;
  std::string enum_wclass, enum_witnesses;
  bool allow_long_run = false;
  enumerate->add_option("--dim", enum_dim, "ambient dimension t")->required();
  enumerate->add_option("--weight-class", enum_wclass, "dimension-8 subtask W4..W8");
  enumerate->add_option("--workers", enum_workers, "worker threads (default: SIDON_WORKERS or all cores)");
  enumerate->add_option("--witnesses", enum_witnesses, "write every maximal set to this file");
  enumerate->add_flag("--allow-long-run", allow_long_run, "permit runs that may take days");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "print the bound table as CSV");
  int t_min = 0, t_max = 0;
  bounds->add_option("--t-min", t_min, "first dimension")->required();
  bounds->add_option("--t-max", t_max, "last dimension")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run the reproduction suite");
  std::string level = "fast";
  verify->add_option("--level", level, "fast|full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (check->parsed()) {
      std::string literal = check_set;
      if (!check_file.empty()) {
        std::ifstream in(check_file);
        if (!in) {
          std::cerr << "error: cannot read '" << check_file << "'\n";
          return exit_usage;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        literal = ss.str();
      }
      if (literal.empty()) {
        std::cerr << "error: need --set or --file\n";
        return exit_usage;
      }
      return cmd_check(check_dim, literal, check_json, check_format == "bits", check_matrix_flag);
    }
    if (enumerate->parsed())
      return cmd_enumerate(enum_dim, enum_wclass, enum_workers, enum_witnesses, allow_long_run);
    if (bounds->parsed()) return cmd_bounds(t_min, t_max);
    if (verify->parsed()) return cmd_verify(level);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
