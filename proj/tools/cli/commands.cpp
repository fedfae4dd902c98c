#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "frieze/error.hpp"
#include "frieze/eta.hpp"
#include "frieze/frieze_pattern.hpp"
#include "frieze/polygon.hpp"
#include "frieze/sequence.hpp"
#include "frieze/similarity.hpp"
#include "frieze/sl2.hpp"
#include "frieze/supplement.hpp"
#include "frieze/tiling.hpp"

namespace frieze::cli {

namespace {

using nlohmann::json;

// Usage errors detected after CLI parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json big_row(const std::vector<BigInt>& row) {
  json out = json::array();
  for (const BigInt& v : row) out.push_back(big(v));
  return out;
}

json mat_json(const Mat2& m) {
  return json::array({json::array({big(m.a()), big(m.b())}), json::array({big(m.c()), big(m.d())})});
}

void print_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int brute_cap_from_env(int fallback) {
  if (const char* env = std::getenv("FRIEZE_BRUTE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("FRIEZE_BRUTE_CAP must be an integer");
    }
  }
  return fallback;
}

// Sequences with fewer than three entries or nonpositive entries are usage
// errors for every command taking a polygon.
Sequence polygon_sequence(const std::string& text) {
  Sequence s = parse_sequence(text);
  if (s.size() < 3) throw UsageError("a sequence needs at least 3 entries");
  for (std::int64_t v : s) {
    if (v < 1) throw UsageError("entries must be positive");
  }
  return s;
}

struct Options {
  std::string format = "text";
  std::string sequence;
  std::vector<std::string> tokens;
  int n = 0;
  std::string method = "formula";
  std::optional<int> cap;
  bool tsa = false;
  std::string matrix;
  std::string seed;
  std::string kfile;
  std::string lfile;
  std::string window = "-2:2,-2:2";
  bool formula_paper = false;
  bool factors = false;
  int root = -1;
};

int cmd_verify(const Options& o, std::ostream& out) {
  const Sequence s = polygon_sequence(o.sequence);
  const bool ok = is_eta(s);
  json j{{"is_quiddity", ok}, {"n", s.size()}};
  if (ok) {
    const SeqClassification c = classify(s);
    const OrbitCanon canon = canonicalize(s);
    j["period"] = c.period;
    j["category"] = to_string(c.category);
    j["canon"] = canon.canon;
    j["orbit_size"] = canon.orbit_size;
  }
  if (o.format == "json") {
    print_json(out, j);
  } else {
    out << "is_quiddity=" << (ok ? "true" : "false") << '\n' << "n=" << s.size() << '\n';
    if (ok) {
      out << "period=" << j["period"].get<std::size_t>() << '\n'
          << "category=" << j["category"].get<std::string>() << '\n'
          << "canon=" << format_sequence(j["canon"].get<Sequence>()) << '\n'
          << "orbit_size=" << j["orbit_size"].get<std::int64_t>() << '\n';
    }
  }
  return ok ? kExitOk : kExitDomainFalse;
}

int cmd_frieze(const Options& o, std::ostream& out, std::ostream& err) {
  const Sequence s = polygon_sequence(o.sequence);
  const int n = static_cast<int>(s.size());
  FriezeWindow w(0, {});
  try {
    w = generate_frieze(s);
  } catch (const FriezeCellError& e) {
    err << "not a frieze pattern: row " << e.row() << ", column " << e.column() << ": "
        << e.what() << '\n';
    return kExitDomainFalse;
  }
  const auto& last = w.row(n - 1);
  for (std::size_t j = 0; j < last.size(); ++j) {
    if (last[j] != 1) {
      err << "not a frieze pattern: row " << n - 1 << ", column " << j << " is " << last[j]
          << " where the closing row of ones should be\n";
      return kExitDomainFalse;
    }
  }
  if (o.format == "json") {
    json rows = json::array();
    for (int i = 1; i < n; ++i) rows.push_back(big_row(display_row(w, i)));
    print_json(out, json{{"n", n}, {"sequence", s}, {"rows", rows}});
  } else {
    out << render_text(w);
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 3) throw UsageError("--n must be at least 3");
  CountMethod method;
  if (o.method == "formula") {
    method = CountMethod::kFormula;
  } else if (o.method == "brute") {
    method = CountMethod::kBrute;
  } else {
    throw UsageError("--method must be formula or brute");
  }
  const int cap = o.cap.value_or(brute_cap_from_env(kDefaultBruteCap));
  if (method == CountMethod::kBrute) {
    err << "canonicalizing " << catalan(o.n - 2) << " triangulations of the " << o.n << "-gon\n";
  }
  BigInt k;
  try {
    k = count_types(o.n, method, cap);
  } catch (const CapExceeded& e) {
    throw UsageError(std::string(e.what()) + " (raise with --cap or FRIEZE_BRUTE_CAP)");
  }
  std::optional<TSACounts> tsa;
  if (o.tsa) tsa = method == CountMethod::kBrute ? count_tsa_brute(o.n, cap) : count_tsa(o.n);
  if (o.format == "json") {
    json j{{"n", o.n}, {"method", o.method}, {"K", big(k)}};
    if (tsa) {
      j["T"] = big(tsa->t);
      j["S"] = big(tsa->s);
      j["A"] = big(tsa->a);
    }
    print_json(out, j);
  } else {
    out << "K=" << k << '\n';
    if (tsa) out << "T=" << tsa->t << '\n' << "S=" << tsa->s << '\n' << "A=" << tsa->a << '\n';
  }
  return kExitOk;
}

int cmd_types(const Options& o, std::ostream& out) {
  if (o.n < 3) throw UsageError("--n must be at least 3");
  const int cap = o.cap.value_or(brute_cap_from_env(kDefaultBruteCap));
  std::vector<OrbitCanon> types;
  try {
    types = enumerate_types(o.n, cap);
  } catch (const CapExceeded& e) {
    throw UsageError(std::string(e.what()) + " (raise with --cap or FRIEZE_BRUTE_CAP)");
  }
  if (o.format == "json") {
    json list = json::array();
    for (const OrbitCanon& t : types) list.push_back(t.canon);
    print_json(out, json{{"n", o.n}, {"K", types.size()}, {"types", list}});
  } else if (o.format == "dot") {
    for (const OrbitCanon& t : types) out << to_dot(from_quiddity(trusted_eta(t.canon)));
  } else {
    out << "K=" << types.size() << '\n';
    for (const OrbitCanon& t : types) {
      const SeqClassification c = classify(t.canon);
      out << format_sequence(t.canon) << " orbit=" << t.orbit_size << " period=" << c.period
          << ' ' << to_string(c.category) << '\n';
    }
  }
  return kExitOk;
}

void report_concat(std::ostream& out, const std::string& format, const Sequence& head,
                   const Sequence& tail, const Sequence& full) {
  const bool valid = full.size() >= 3 && is_eta(full);
  if (format == "json") {
    print_json(out, json{{"input", head},
                         {"result", tail},
                         {"concatenation", full},
                         {"is_quiddity", valid}});
  } else {
    out << format_sequence(tail) << '\n'
        << "concatenation " << format_sequence(full)
        << (valid ? " is a quiddity sequence" : " is NOT a quiddity sequence") << '\n';
  }
}

int cmd_supplement(const Options& o, std::ostream& out, std::ostream& err) {
  const Sequence s = parse_sequence(o.sequence);
  if (!is_basic(s)) {
    err << "(" << format_sequence(s) << ") is not basic: expected 1 followed by entries >= 2\n";
    return kExitDomainFalse;
  }
  const Sequence tail = supplement(BasicSeq(s)).entries();
  Sequence full = s;
  full.insert(full.end(), tail.begin(), tail.end());
  report_concat(out, o.format, s, tail, full);
  return kExitOk;
}

int cmd_extend(const Options& o, std::ostream& out, std::ostream& err) {
  std::string joined;
  for (const std::string& t : o.tokens) joined += t;
  std::vector<Sequence> blocks;
  std::string_view rest(joined);
  while (true) {
    const auto plus = rest.find('+');
    blocks.push_back(parse_sequence(rest.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    rest.remove_prefix(plus + 1);
  }
  Sequence head;
  for (const Sequence& b : blocks) {
    if (!is_superbasic(b)) {
      err << "(" << format_sequence(b) << ") is not super-basic\n";
      return kExitDomainFalse;
    }
    head.insert(head.end(), b.begin(), b.end());
  }
  const Sequence full = extend_superbasic(blocks).entries();
  const Sequence tail(full.begin() + static_cast<std::ptrdiff_t>(head.size()), full.end());
  report_concat(out, o.format, head, tail, full);
  return kExitOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
  const Sequence s = parse_sequence(o.sequence);
  const EmbeddingResult r = is_embeddable(s, o.cap.value_or(kDefaultEmbeddingSearchLength));
  const char* status = r.status == Embeddability::kEmbeddable      ? "embeddable"
                       : r.status == Embeddability::kNotEmbeddable ? "not-embeddable"
                                                                   : "unknown";
  if (o.format == "json") {
    json j{{"input", s}, {"status", status}, {"reason", r.reason}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    print_json(out, j);
  } else {
    out << "status=" << status << '\n';
    if (!r.witness.empty()) out << "witness=" << format_sequence(r.witness) << '\n';
    out << "reason=" << r.reason << '\n';
  }
  return r.status == Embeddability::kEmbeddable ? kExitOk : kExitDomainFalse;
}

Mat2 parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw UsageError("--matrix expects JSON [[a,b],[c,d]]");
  }
  auto cell = [&](int r, int c) -> BigInt {
    const json& v = j.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    if (v.is_string()) return BigInt(v.get<std::string>());
    throw UsageError("matrix entries must be integers");
  };
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
      j[0].size() != 2 || j[1].size() != 2) {
    throw UsageError("--matrix expects JSON [[a,b],[c,d]]");
  }
  return Mat2(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1));
}

int cmd_reduce(const Options& o, std::ostream& out) {
  std::optional<std::string> word_text;
  if (!o.matrix.empty()) {
    if (!o.sequence.empty()) throw UsageError("give either a word or --matrix, not both");
  } else if (o.sequence.empty()) {
    throw UsageError("reduce needs a word or --matrix");
  } else {
    word_text = o.sequence;
  }
  const Mat2 m = word_text ? eval(parse_word(*word_text)) : parse_matrix(o.matrix);
  const TSNormalForm nf = ts_normal_form(m);
  const std::optional<int> order = element_order(m);
  if (o.format == "json") {
    json j{{"matrix", mat_json(m)}, {"normal_form", nf.to_string()}};
    j["order"] = order ? json(*order) : json("infinite");
    if (word_text) j["word"] = format_word(parse_word(*word_text));
    print_json(out, j);
  } else {
    if (word_text) out << "word=" << format_word(parse_word(*word_text)) << '\n';
    out << "matrix=" << m.to_json() << '\n'
        << "normal_form=" << nf.to_string() << '\n'
        << "order=" << (order ? std::to_string(*order) : std::string("infinite")) << '\n';
  }
  return kExitOk;
}

std::map<std::int64_t, BigInt> read_factor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    throw UsageError(path + ": expected a JSON object mapping index to factor");
  }
  if (!j.is_object()) throw UsageError(path + ": expected a JSON object mapping index to factor");
  std::map<std::int64_t, BigInt> out;
  for (const auto& [key, value] : j.items()) {
    std::int64_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw UsageError(path + ": key '" + key + "' is not an integer");
    }
    if (!value.is_number_integer()) throw UsageError(path + ": factors must be integers");
    out[index] = value.get<std::int64_t>();
  }
  return out;
}

json window_json(const TilingWindow& w) {
  json values = json::array();
  for (std::int64_t i = w.rows().lo; i <= w.rows().hi; ++i) {
    json row = json::array();
    for (std::int64_t j = w.cols().lo; j <= w.cols().hi; ++j) row.push_back(big(w.at(i, j)));
    values.push_back(row);
  }
  return json{{"rows", {w.rows().lo, w.rows().hi}},
              {"cols", {w.cols().lo, w.cols().hi}},
              {"values", values},
              {"positive", w.is_positive()},
              {"unimodular", w.is_unimodular()}};
}

int cmd_tiling(const Options& o, std::ostream& out) {
  const auto comma = o.window.find(',');
  if (comma == std::string::npos) throw UsageError("--window expects i0:i1,j0:j1");
  const Interval rows = parse_interval(o.window.substr(0, comma));
  const Interval cols = parse_interval(o.window.substr(comma + 1));

  TilingWindow w = formula_window({0, 0}, {0, 0});
  if (o.formula_paper) {
    if (!o.seed.empty()) throw UsageError("--formula-paper and --seed are exclusive");
    w = formula_window(rows, cols);
  } else {
    if (o.seed.empty() || o.kfile.empty() || o.lfile.empty()) {
      throw UsageError("tiling needs --formula-paper or --seed with --kfile and --lfile");
    }
    const Sequence seed = parse_sequence(o.seed);
    if (seed.size() != 4) throw UsageError("--seed expects a00,a01,a10,a11");
    FactorVectors f;
    f.column = read_factor_file(o.kfile);
    f.row = read_factor_file(o.lfile);
    const GeneratedTiling g = generate_tiling(Mat2(seed[0], seed[1], seed[2], seed[3]), f, rows, cols);
    w = g.window.crop(rows, cols);
  }

  std::optional<FactorVectors> factors;
  if (o.factors) factors = extract_factors(w);
  if (o.format == "json") {
    json j = window_json(w);
    if (factors) {
      json k = json::object();
      json l = json::object();
      for (const auto& [idx, v] : factors->column) k[std::to_string(idx)] = big(v);
      for (const auto& [idx, v] : factors->row) l[std::to_string(idx)] = big(v);
      j["k"] = k;
      j["l"] = l;
    }
    print_json(out, j);
  } else {
    out << render_text(w);
    if (factors) {
      out << "k:";
      for (const auto& [idx, v] : factors->column) out << ' ' << idx << '=' << v;
      out << "\nl:";
      for (const auto& [idx, v] : factors->row) out << ' ' << idx << '=' << v;
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_tree(const Options& o, std::ostream& out, std::ostream& err) {
  const Sequence s = polygon_sequence(o.sequence);
  if (!is_eta(s)) {
    err << "(" << format_sequence(s) << ") is not a quiddity sequence\n";
    return kExitDomainFalse;
  }
  const Triangulation t = from_quiddity(trusted_eta(s));
  const int n = static_cast<int>(s.size());
  if (o.root >= n) throw UsageError("--root must name a side 0..n-1");
  const DualTree tree = o.root < 0 ? to_dual_tree(t) : to_dual_tree(t, o.root);
  if (o.format == "dot") {
    out << tree.to_dot();
  } else if (o.format == "json") {
    json diagonals = json::array();
    for (const Diagonal& d : t.diagonals()) diagonals.push_back({d.u, d.v});
    print_json(out, json{{"n", n},
                         {"diagonals", diagonals},
                         {"root_side", tree.root_side()},
                         {"bracket", tree.to_bracket()},
                         {"vertex_counts", tree.vertex_counts()}});
  } else {
    out << "bracket=" << tree.to_bracket() << '\n' << "diagonals=";
    bool first = true;
    for (const Diagonal& d : t.diagonals()) {
      out << (first ? "" : " ") << '(' << d.u << ',' << d.v << ')';
      first = false;
    }
    out << '\n' << "vertex_counts=" << format_sequence(tree.vertex_counts()) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frieze patterns, quiddity sequences and polygon triangulations", "frieze"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json", "dot"};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* verify = app.add_subcommand("verify", "Check a quiddity sequence and classify it");
  verify->add_option("sequence", o.sequence, "Comma-separated entries")->required();
  add_format(verify);

  auto* frieze = app.add_subcommand("frieze", "Render the frieze pattern of a sequence");
  frieze->add_option("sequence", o.sequence)->required();
  add_format(frieze);

  auto* count = app.add_subcommand("count", "Number of similarity types K_n");
  count->add_option("--n", o.n)->required();
  count->add_option("--method", o.method)->check(CLI::IsMember({"formula", "brute"}));
  count->add_option("--cap", o.cap, "Largest n for brute force");
  count->add_flag("--tsa", o.tsa, "Also print T_n, S_n, A_n");
  add_format(count);

  auto* types = app.add_subcommand("types", "List similarity types of length n");
  types->add_option("--n", o.n)->required();
  types->add_option("--cap", o.cap, "Largest n to enumerate");
  types->add_flag_callback("--dot", [&] { o.format = "dot"; }, "Same as --format dot");
  add_format(types);

  auto* supp = app.add_subcommand("supplement", "Supplement of a basic sequence");
  supp->add_option("sequence", o.sequence)->required();
  add_format(supp);

  auto* extend = app.add_subcommand("extend", "Complete super-basic blocks: 1,3,3 + 1,3,4");
  extend->add_option("blocks", o.tokens)->required();
  add_format(extend);

  auto* embed = app.add_subcommand("embed", "Is a block part of some quiddity sequence");
  embed->add_option("sequence", o.sequence)->required();
  embed->add_option("--cap", o.cap, "Longest quiddity sequence searched");
  add_format(embed);

  auto* reduce = app.add_subcommand("reduce", "Evaluate a word over S, T, U");
  reduce->add_option("word", o.sequence, "e.g. U*S*U*S*U*S");
  reduce->add_option("--matrix", o.matrix, "JSON [[a,b],[c,d]] instead of a word");
  add_format(reduce);

  auto* tiling = app.add_subcommand("tiling", "Positive integer SL2 tilings");
  tiling->add_option("--seed", o.seed, "a00,a01,a10,a11");
  tiling->add_option("--kfile", o.kfile, "JSON object: column index -> factor");
  tiling->add_option("--lfile", o.lfile, "JSON object: row index -> factor");
  tiling->add_option("--window", o.window, "i0:i1,j0:j1 (use --window=...)");
  tiling->add_flag("--formula-paper", o.formula_paper, "Closed-form tiling fractured at 0");
  tiling->add_flag("--factors", o.factors, "Also print the factor vectors");
  add_format(tiling);

  auto* tree = app.add_subcommand("tree", "Triangulation and dual tree of a sequence");
  tree->add_option("sequence", o.sequence)->required();
  tree->add_option("--root", o.root, "Root side (default n-1)");
  add_format(tree);

  std::vector<const char*> argv{"frieze"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (frieze->parsed()) return cmd_frieze(o, out, err);
    if (count->parsed()) return cmd_count(o, out, err);
    if (types->parsed()) return cmd_types(o, out);
    if (supp->parsed()) return cmd_supplement(o, out, err);
    if (extend->parsed()) return cmd_extend(o, out, err);
    if (embed->parsed()) return cmd_embed(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (tiling->parsed()) return cmd_tiling(o, out);
    if (tree->parsed()) return cmd_tree(o, out, err);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainFalse;
  }
  return kExitUsage;
}

}  // namespace frieze::cli
