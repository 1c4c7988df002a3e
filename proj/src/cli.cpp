#include "stacksort/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "stacksort/cache.hpp"
#include "stacksort/constructions.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/oracle.hpp"
#include "stacksort/search.hpp"
#include "stacksort/svg.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  unsigned jobs = 1;
  std::vector<std::string> perm_tokens;
  std::string method = "vhc";
  std::string cache;
  std::string svg_out;
  std::string csv;
  std::string early_exit;
  std::string target;
  std::size_t max_n = 0;
  std::size_t index = 0;
  std::string matrix;
  std::string matrix_perm;
  std::size_t random = 0;
  std::uint64_t seed = 1;
};

Permutation perm_arg(const Options& o) {
  std::string text;
  for (const auto& t : o.perm_tokens) text += (text.empty() ? "" : " ") + t;
  return parse_permutation(text);
}

BigInt integer_arg(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorKind::MalformedInput, std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
  return BigInt(text);
}

std::string composition_text(const Composition& q) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + std::to_string(q[i]);
  return s + ")";
}

void remember(const std::string& cache_path, const std::vector<CacheRecord>& fresh) {
  if (cache_path.empty() || fresh.empty()) return;
  const auto existing = cache_index(cache_read(cache_path));
  std::vector<CacheRecord> append;
  for (const auto& r : fresh) {
    auto it = existing.find(r.perm);
    if (it == existing.end()) {
      append.push_back(r);
    } else if (it->second != r.fertility) {
      throw Error(ErrorKind::CorruptRecord, "cache holds " + it->second + " for " + r.perm + ", computed " + r.fertility);
    }
  }
  cache_write(cache_path, append);
}

CacheRecord record_for(const Permutation& p, const BigInt& f) { return {normalize(p).spaced(), to_decimal(f)}; }

int cmd_sort(const Options& o, std::ostream& out) {
  const Permutation p = perm_arg(o);
  const Permutation image = stack_sort(p);
  if (o.json) {
    out << Json{{"perm", p.spaced()}, {"image", image.spaced()}}.dump() << '\n';
  } else {
    out << image.str() << '\n';
  }
  return kExitOk;
}

int cmd_fertility(const Options& o, std::ostream& out) {
  const Permutation p = perm_arg(o);
  if (o.method != "vhc" && o.method != "brute" && o.method != "both") {
    throw CLI::ValidationError("--method", "expected vhc, brute or both");
  }
  const std::string key = normalize(p).spaced();

  if (!o.early_exit.empty()) {
    if (o.method != "vhc") throw CLI::ValidationError("--early-exit", "only applies to --method vhc");
    const BigInt limit = integer_arg(o.early_exit, "--early-exit");
    const BoundedFertility r = fertility(p, limit);
    if (o.json) {
      Json j{{"perm", p.spaced()}, {"fertility", r.exceeded ? Json() : Json(to_decimal(r.value))}, {"method", "vhc"}};
      if (r.exceeded) j["exceeds"] = to_decimal(limit);
      out << j.dump() << '\n';
    } else if (r.exceeded) {
      out << "fertility(" << p.str() << ") > " << limit << '\n';
    } else {
      out << "fertility(" << p.str() << ") = " << r.value << '\n';
    }
    if (!r.exceeded) remember(o.cache, {record_for(p, r.value)});
    return kExitOk;
  }

  std::optional<BigInt> by_vhc;
  std::optional<BigInt> by_brute;
  if (o.method != "brute") {
    if (!o.cache.empty()) {
      const auto index = cache_index(cache_read(o.cache));
      if (auto it = index.find(key); it != index.end()) by_vhc = BigInt(it->second);
    }
    if (!by_vhc) by_vhc = fertility(p);
  }
  if (o.method != "vhc") {
    PreimageOracle oracle(o.max_n == 0 ? PreimageOracle::kDefaultLimit : o.max_n, o.jobs);
    by_brute = oracle.fertility(p);
  }
  if (by_vhc) remember(o.cache, {record_for(p, *by_vhc)});

  const bool agree = !(by_vhc && by_brute) || *by_vhc == *by_brute;
  if (o.json) {
    const BigInt& value = by_vhc ? *by_vhc : *by_brute;
    Json j{{"perm", p.spaced()}, {"fertility", to_decimal(value)}, {"method", o.method}};
    if (by_vhc && by_brute) j["agree"] = agree;
    out << j.dump() << '\n';
  } else {
    if (by_vhc) out << "vhc:   fertility(" << p.str() << ") = " << *by_vhc << '\n';
    if (by_brute) out << "brute: fertility(" << p.str() << ") = " << *by_brute << '\n';
    if (by_vhc && by_brute) out << (agree ? "agree" : "DISAGREE") << '\n';
  }
  return agree ? kExitOk : kExitDomainError;
}

int cmd_preimages(const Options& o, std::ostream& out) {
  const Permutation p = perm_arg(o);
  PreimageOracle oracle(o.max_n == 0 ? PreimageOracle::kDefaultLimit : o.max_n, o.jobs);
  const auto members = oracle.preimages(p);
  if (o.json) {
    Json list = Json::array();
    for (const auto& m : members) list.push_back(m.spaced());
    out << Json{{"perm", p.spaced()}, {"count", members.size()}, {"preimages", list}}.dump() << '\n';
  } else {
    out << members.size() << " preimage(s) of " << p.str() << '\n';
    for (const auto& m : members) out << m.str() << '\n';
  }
  return kExitOk;
}

int cmd_vhc(const Options& o, std::ostream& out) {
  const Permutation p = perm_arg(o);
  const auto configs = enumerate_vhc(p);
  if (o.index > configs.size()) {
    throw Error(ErrorKind::MalformedInput, "--index " + std::to_string(o.index) + " out of range");
  }
  if (o.json) {
    Json comps = Json::array();
    for (const auto& c : configs) comps.push_back(induced_composition(p, c));
    out << Json{{"perm", p.spaced()}, {"count", configs.size()}, {"compositions", comps}}.dump() << '\n';
  } else {
    out << configs.size() << " valid hook configuration(s) of " << p.str() << '\n';
    for (std::size_t i = 0; i < configs.size(); ++i) {
      out << "#" << i + 1 << ' ';
      for (const Hook& h : configs[i].hooks) out << '(' << h.sw << "->" << h.ne << ')';
      if (configs[i].hooks.empty()) out << "(no hooks)";
      out << "  q = " << composition_text(induced_composition(p, configs[i]))
          << "  C_q = " << composition_weight(induced_composition(p, configs[i])) << '\n';
    }
  }
  if (!o.svg_out.empty()) {
    std::optional<std::size_t> which;
    if (o.index != 0) which = o.index;
    const auto docs = render_svg(p, which);
    std::filesystem::create_directories(o.svg_out);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      const std::size_t ordinal = which ? *which : i + 1;
      const auto path = std::filesystem::path(o.svg_out) / ("vhc_" + std::to_string(ordinal) + ".svg");
      std::ofstream file(path);
      file << docs[i];
      if (!file) throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
    if (!o.json) out << "wrote " << docs.size() << " SVG file(s) to " << o.svg_out << '\n';
  }
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const std::size_t n = static_cast<std::size_t>(integer_arg(o.target, "n"));
  if (n < 1) throw Error(ErrorKind::MalformedInput, "n must be at least 1");
  const SpectrumReport report = spectrum(n, o.jobs);
  if (o.json) {
    Json achieved = Json::array();
    Json witnesses = Json::object();
    for (const auto& [value, perm] : report.witnesses) {
      achieved.push_back(to_decimal(value));
      witnesses[to_decimal(value)] = perm.spaced();
    }
    out << Json{{"n", n}, {"achieved", achieved}, {"witnesses", witnesses}}.dump() << '\n';
  } else {
    out << report.witnesses.size() << " positive fertilities in S_" << n << '\n';
    for (const auto& [value, perm] : report.witnesses) out << value << '\t' << perm.str() << '\n';
  }
  if (!o.csv.empty()) {
    std::ofstream file(o.csv);
    file << "value,witness\n";
    for (const auto& [value, perm] : report.witnesses) file << value << ',' << perm.spaced() << '\n';
    if (!file) throw Error(ErrorKind::IoError, "cannot write " + o.csv);
  }
  std::vector<CacheRecord> fresh;
  for (const auto& [value, perm] : report.witnesses) fresh.push_back(record_for(perm, value));
  remember(o.cache, fresh);
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const BigInt f = integer_arg(o.target, "f");
  const std::size_t max_n = o.max_n == 0 ? 8 : o.max_n;
  const ClassifyResult r = classify(f, max_n, o.jobs);
  if (o.json) {
    Json j{{"f", to_decimal(r.f)}, {"verdict", to_string(r.verdict)}};
    if (r.witness) j["witness"] = r.witness->spaced();
    j["searched_n"] = r.searched_n;
    out << j.dump() << '\n';
  } else {
    out << r.f << ": " << to_string(r.verdict);
    if (r.witness) out << " (witness " << r.witness->str() << ")";
    if (r.verdict == Verdict::UnknownUpTo) out << " (no permutation of length <= " << r.searched_n << ")";
    out << '\n';
  }
  if (r.witness) remember(o.cache, {record_for(*r.witness, r.f)});
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const BigInt f = integer_arg(o.target, "f");
  const WitnessReport r = witness(f);
  if (o.json) {
    Json j{{"f", to_decimal(f)}, {"method", to_string(r.method)}};
    if (r.witness) j["witness"] = r.witness->spaced();
    out << j.dump() << '\n';
  } else if (r.witness) {
    out << f << ": " << r.witness->str() << " [" << to_string(r.method) << "]\n";
  } else {
    out << f << ": no construction applies\n";
  }
  return kExitOk;
}

int cmd_density(const Options& o, std::ostream& out) {
  const BigInt upper = integer_arg(o.target, "N");
  const DensityReport r = density_lower_bound(upper);
  const std::string ratio = boost::multiprecision::numerator(r.ratio).str() + "/" +
                            boost::multiprecision::denominator(r.ratio).str();
  if (o.json) {
    out << Json{{"N", to_decimal(upper)}, {"count", to_decimal(r.count)}, {"ratio", ratio}}.dump() << '\n';
  } else {
    out << r.count << " of [0," << upper << ") are covered: " << ratio << '\n';
  }
  return kExitOk;
}

BoundMatrix parse_matrix(const std::string& text) {
  BoundMatrix m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<int> values;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(' '));
      cell.erase(cell.find_last_not_of(' ') + 1);
      values.push_back(static_cast<int>(integer_arg(cell, "matrix entry")));
    }
    m.rows.push_back(std::move(values));
  }
  return m;
}

std::string rational_text(const Rational& r) {
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

int cmd_bound_check(const Options& o, std::ostream& out) {
  const int chosen = (!o.matrix.empty()) + (!o.matrix_perm.empty()) + (o.random > 0);
  if (chosen != 1) throw CLI::ValidationError("bound-check", "give exactly one of --matrix, --perm, --random");

  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    std::size_t passed = 0;
    for (std::size_t i = 0; i < o.random; ++i) passed += matrix_bound_holds(random_bound_matrix(rng)) ? 1 : 0;
    if (o.json) {
      out << Json{{"trials", o.random}, {"passed", passed}, {"seed", o.seed}}.dump() << '\n';
    } else {
      out << passed << " of " << o.random << " random matrices satisfy N_D <= F_D + 1\n";
    }
    return passed == o.random ? kExitOk : kExitDomainError;
  }

  BoundMatrix m;
  if (!o.matrix.empty()) {
    m = parse_matrix(o.matrix);
  } else {
    const Permutation p = parse_permutation(o.matrix_perm);
    m = matrix_of(valid_compositions(p));
    if (m.rows.empty()) throw Error(ErrorKind::UnsortedPermutation, p.spaced() + " has no valid composition");
  }
  const BoundValues v = nd_fd(m);
  const bool holds = matrix_bound_holds(m);
  if (o.json) {
    out << Json{{"N_D", rational_text(v.n_d)}, {"F_D", to_decimal(v.f_d)}, {"holds", holds}}.dump() << '\n';
  } else {
    out << "N_D = " << rational_text(v.n_d) << ", F_D = " << v.f_d << ", N_D <= F_D + 1: " << (holds ? "yes" : "no")
        << '\n';
  }
  return holds ? kExitOk : kExitDomainError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Stack-sorting fertility toolkit", "stacksort"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--jobs", o.jobs, "Worker threads for exhaustive passes")->check(CLI::PositiveNumber);
  app.add_option("--cache", o.cache, "JSON-lines fertility cache");

  auto* sort = app.add_subcommand("sort", "Apply the stack-sorting map once");
  sort->add_option("perm", o.perm_tokens, "Permutation")->required();

  auto* fert = app.add_subcommand("fertility", "Count preimages under the stack-sorting map");
  fert->add_option("perm", o.perm_tokens, "Permutation")->required();
  fert->add_option("--method", o.method, "vhc, brute or both")->check(CLI::IsMember({"vhc", "brute", "both"}));
  fert->add_option("--early-exit", o.early_exit, "Stop once the count exceeds F");
  fert->add_option("--max-n", o.max_n, "Brute-force length bound");

  auto* pre = app.add_subcommand("preimages", "List preimages by brute force");
  pre->add_option("perm", o.perm_tokens, "Permutation")->required();
  pre->add_option("--max-n", o.max_n, "Brute-force length bound");

  auto* vhc = app.add_subcommand("vhc", "List valid hook configurations");
  vhc->add_option("perm", o.perm_tokens, "Permutation")->required();
  vhc->add_option("--svg-out", o.svg_out, "Directory for SVG renderings");
  vhc->add_option("--index", o.index, "Render only this configuration (1-based)");

  auto* spec = app.add_subcommand("spectrum", "Fertilities attained in S_n");
  spec->add_option("n", o.target, "Length")->required();
  spec->add_option("--csv", o.csv, "Write value,witness rows");

  auto* cls = app.add_subcommand("classify", "Decide whether f is a fertility number");
  cls->add_option("f", o.target, "Target fertility")->required();
  cls->add_option("--max-n", o.max_n, "Longest permutation length to scan (default 8)");

  auto* con = app.add_subcommand("construct", "Build a permutation with fertility f");
  con->add_option("f", o.target, "Target fertility")->required();

  auto* den = app.add_subcommand("density", "Count constructible fertilities below N");
  den->add_option("N", o.target, "Upper bound")->required();

  auto* bc = app.add_subcommand("bound-check", "Evaluate N_D <= F_D + 1");
  bc->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','");
  bc->add_option("--perm", o.matrix_perm, "Use the valid compositions of this permutation");
  bc->add_option("--random", o.random, "Number of random matrices to test");
  bc->add_option("--seed", o.seed, "Seed for --random");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (sort->parsed()) return cmd_sort(o, out);
    if (fert->parsed()) return cmd_fertility(o, out);
    if (pre->parsed()) return cmd_preimages(o, out);
    if (vhc->parsed()) return cmd_vhc(o, out);
    if (spec->parsed()) return cmd_spectrum(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (con->parsed()) return cmd_construct(o, out);
    if (den->parsed()) return cmd_density(o, out);
    if (bc->parsed()) return cmd_bound_check(o, out);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace stacksort
