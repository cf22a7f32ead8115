// shiftpat command-line tool.
//
// Exit codes: 0 ok/verified, 1 usage, 2 malformed permutation or word,
// 3 conjecture refuted or methods disagree, 4 bound exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "shiftpat/conjectures.hpp"
#include "shiftpat/enumeration.hpp"
#include "shiftpat/errors.hpp"
#include "shiftpat/realization.hpp"

using namespace shiftpat;
using Json = nlohmann::ordered_json;

namespace {

enum class Format { text, json, tsv };

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitRefuted = 3;
constexpr int kExitBound = 4;

// Oracle sweeps beyond this many candidate words are refused.
constexpr double kOracleWordLimit = 2e7;

struct Output {
  Format format = Format::text;
  Json input;
  Json result;
  Json details = Json::object();
  std::ostringstream text;

  void emit() const {
    if (format == Format::json) {
      Json doc;
      doc["input"] = input;
      doc["result"] = result;
      doc["details"] = details;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
  }
};

Json exact(const ExactInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(to_string(v));
}

Json perm_json(const Permutation& pi) { return Json(std::vector<int>(pi.entries().begin(), pi.entries().end())); }

void check_oracle_size(int n, int alphabet) {
  const double words = std::pow(static_cast<double>(alphabet), n - 1) * (n - 1) * 2;
  if (words > kOracleWordLimit) {
    throw BoundExceeded("oracle sweep for n=" + std::to_string(n) + ", N=" + std::to_string(alphabet) +
                        " needs about " + std::to_string(static_cast<long long>(words)) + " words");
  }
}

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

void list_patterns(Output& out, const std::set<Permutation>& patterns) {
  out.result = Json::array();
  for (const auto& pi : patterns) {
    out.result.push_back(perm_json(pi));
    out.text << format_permutation(pi) << "\n";
  }
  out.details["count"] = patterns.size();
}

ExactInt count_by(const std::string& method, int n, int alphabet, Parallelism par) {
  if (method == "closed") return count_a(n, alphabet);
  if (method == "recurrence") return count_a_recurrence(n, alphabet);
  if (method == "brute") {
    const auto row = enumerate_by_nmin(n, par);
    const auto it = row.cells.find(alphabet);
    return it == row.cells.end() ? ExactInt(0) : it->second.count;
  }
  check_oracle_size(n, alphabet);
  const std::size_t upper = oracle_allowed(n, alphabet, par).size();
  const std::size_t lower = alphabet > 1 ? oracle_allowed(n, alphabet - 1, par).size() : 0;
  return ExactInt(upper - lower);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift-realizable permutation patterns: minimal alphabets, witnesses, counts"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  unsigned threads = 1;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for exhaustive sweeps")
      ->envname("SHIFTPAT_THREADS")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  std::string perm_text, word_text, variant_text, method = "closed";
  int n = 0, alphabet = 0, n_max = 0, alphabet_max = 0, m = 0, bound = 0;

  auto* nmin_cmd = app.add_subcommand("nmin", "Minimal alphabet N(pi) and its ingredients");
  nmin_cmd->add_option("perm", perm_text, "Permutation, e.g. \"4 3 6 1 5 2\" or 436152")->required();

  auto* witness_cmd = app.add_subcommand("witness", "A word over N(pi) symbols realizing pi");
  witness_cmd->add_option("perm", perm_text)->required();
  witness_cmd->add_option("--variant", variant_text, "A..F");
  witness_cmd->add_option("--m", m, "Repetitions of p for variants A and B")->check(CLI::PositiveNumber);

  auto* pat_cmd = app.add_subcommand("pat", "Order pattern of the first n suffixes of a word");
  pat_cmd->add_option("word", word_text, "Word as PRE(PER), e.g. 2102212210(0)")->required();
  pat_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

  auto* allowed_cmd = app.add_subcommand("allowed", "Patterns of length n realized over N symbols");
  auto* forbidden_cmd = app.add_subcommand("forbidden", "Patterns of length n never realized over N symbols");
  auto* minimal_cmd = app.add_subcommand("minimal-forbidden", "Forbidden patterns whose windows are all allowed");
  for (auto* cmd : {allowed_cmd, forbidden_cmd, minimal_cmd}) {
    cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    cmd->add_option("N", alphabet)->required()->check(CLI::PositiveNumber);
  }

  auto* count_cmd = app.add_subcommand("count", "a_{n,N}");
  count_cmd->add_option("n", n)->required();
  count_cmd->add_option("N", alphabet)->required();
  count_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"closed", "recurrence", "brute", "oracle"}))
      ->capture_default_str();

  auto* table_cmd = app.add_subcommand("table", "a_{n,N} for 2 <= n <= n_max as TSV");
  table_cmd->add_option("n_max", n_max)->required();

  auto* sextet_cmd = app.add_subcommand("sextet", "The six permutations of length n needing n-1 symbols");
  sextet_cmd->add_option("n", n)->required();

  bound = kDefaultConjectureBound;
  auto* conj1_cmd = app.add_subcommand("conjecture1", "Descent sets of zeroed marked cycles versus S_n");
  conj1_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  conj1_cmd->add_option("--bound", bound, "Largest n accepted")->capture_default_str();

  auto* conj2_cmd = app.add_subcommand("conjecture2", "6 | a_{n,N} for 3 <= N < n <= n_max");
  conj2_cmd->add_option("n_max", n_max)->required();

  auto* xcheck_cmd = app.add_subcommand("xcheck", "Closed form, recurrence, brute force and oracle side by side");
  xcheck_cmd->add_option("n_max", n_max)->required();
  xcheck_cmd->add_option("N_max", alphabet_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output out;
  out.format = format_name == "json" ? Format::json : format_name == "tsv" ? Format::tsv : Format::text;
  const Parallelism par{threads};
  const bool tsv = out.format == Format::tsv;
  int status = kExitOk;

  try {
    if (nmin_cmd->parsed()) {
      const Permutation pi = parse_permutation(perm_text);
      out.input = {{"command", "nmin"}, {"perm", perm_json(pi)}};
      const int value = n_min(pi);
      const Delta d = pi.size() >= 2 ? delta(pi) : Delta{};
      const std::vector<int> a_values = pi.size() >= 2 ? a_set(pi) : std::vector<int>{};
      const MarkedCycle mc = theta(pi);
      out.result = value;
      out.details["A"] = a_values;
      out.details["Delta"] = d.value;
      out.details["Delta_case"] = delta_case_name(d.kind);
      out.details["theta"] = format_marked_cycle(mc);
      out.details["des"] = marked_des(mc);
      out.details["epsilon"] = marked_epsilon(mc);
      const char* sep = tsv ? "\t" : "=";
      out.text << "N" << sep << value << "\n"
               << "A" << sep << (tsv ? join(a_values, ",") : "{" + join(a_values, ",") + "}") << "\n"
               << "Delta" << sep << d.value << (tsv ? "\n" : " (case " + std::string(delta_case_name(d.kind)) + ")\n")
               << "theta" << sep << format_marked_cycle(mc) << "\n"
               << "des" << sep << marked_des(mc) << "\n"
               << "epsilon" << sep << marked_epsilon(mc) << "\n";
    } else if (witness_cmd->parsed()) {
      const Permutation pi = parse_permutation(perm_text);
      std::optional<WitnessVariant> variant;
      if (!variant_text.empty()) variant = parse_variant(variant_text);
      std::optional<int> reps;
      if (witness_cmd->count("--m")) reps = m;
      out.input = {{"command", "witness"}, {"perm", perm_json(pi)}};
      if (variant) out.input["variant"] = std::string(1, variant_name(*variant));
      if (reps) out.input["m"] = *reps;
      const auto spec = witness(pi, variant, reps);
      const bool ok = realize_check(pi, spec.word);
      const std::string word = format_word(spec.word);
      out.result = word;
      out.details["variant"] = std::string(1, variant_name(spec.variant));
      if (spec.k) out.details["k"] = spec.k;
      if (spec.m) out.details["m"] = spec.m;
      out.details["alphabet"] = spec.word.alphabet_size();
      out.details["realizes"] = ok;
      out.text << word << "\n";
      if (!tsv) {
        out.text << "variant " << variant_name(spec.variant);
        if (spec.k) out.text << " k=" << spec.k << " m=" << spec.m;
        out.text << ", N=" << spec.word.alphabet_size() << "\n";
        out.text << "check: " << (ok ? "realizes " : "FAILS to realize ") << format_permutation(pi) << "\n";
      }
      if (!ok) status = kExitRefuted;
    } else if (pat_cmd->parsed()) {
      const auto w = parse_word(word_text);
      out.input = {{"command", "pat"}, {"word", format_word(w)}, {"n", n}};
      const auto pi = pat(w, n);
      if (pi) {
        out.result = perm_json(*pi);
        out.text << format_permutation(*pi) << "\n";
      } else {
        out.result = nullptr;
        out.text << "undefined\n";
      }
    } else if (allowed_cmd->parsed() || forbidden_cmd->parsed() || minimal_cmd->parsed()) {
      const std::string name = allowed_cmd->parsed() ? "allowed" : forbidden_cmd->parsed() ? "forbidden" : "minimal-forbidden";
      out.input = {{"command", name}, {"n", n}, {"N", alphabet}};
      check_oracle_size(n, alphabet);
      if (n > kDefaultEnumerationBound && name != "allowed") {
        throw BoundExceeded("n=" + std::to_string(n) + " exceeds enumeration bound " +
                            std::to_string(kDefaultEnumerationBound));
      }
      if (name == "allowed") list_patterns(out, oracle_allowed(n, alphabet, par));
      if (name == "forbidden") list_patterns(out, forbidden(n, alphabet, par));
      if (name == "minimal-forbidden") list_patterns(out, minimal_forbidden(n, alphabet, par));
    } else if (count_cmd->parsed()) {
      require(n >= 2 && alphabet >= 2, "count requires n >= 2 and N >= 2");
      out.input = {{"command", "count"}, {"n", n}, {"N", alphabet}, {"method", method}};
      const ExactInt value = count_by(method, n, alphabet, par);
      out.result = exact(value);
      out.text << value << "\n";
    } else if (table_cmd->parsed()) {
      require(n_max >= 2, "table requires n_max >= 2");
      out.input = {{"command", "table"}, {"n_max", n_max}};
      const auto table = closed_form_table(n_max);
      out.result = Json::array();
      out.text << "n\tN\ta_nN\n";
      for (const auto& [key, cell] : table.cells) {
        out.result.push_back({{"n", key.first}, {"N", key.second}, {"a_nN", exact(cell.count)}});
        out.text << key.first << "\t" << key.second << "\t" << cell.count << "\n";
      }
    } else if (sextet_cmd->parsed()) {
      require(n >= 3, "sextet requires n >= 3");
      out.input = {{"command", "sextet"}, {"n", n}};
      list_patterns(out, extremal_sextet(n));
      Json cycles = Json::array();
      for (const auto& mc : extremal_marked_cycles(n)) cycles.push_back(format_marked_cycle(mc));
      out.details["marked_cycles"] = cycles;
    } else if (conj1_cmd->parsed()) {
      out.input = {{"command", "conjecture1"}, {"n", n}, {"bound", bound}};
      const auto report = check_conjecture1(n, bound);
      out.result = report.matches ? "verified" : "refuted";
      out.details["population"] = exact(report.permutations.population());
      out.details["descent_sets"] = report.permutations.by_set.size();
      Json by_count = Json::object();
      for (const auto& [k, v] : report.zeroed_cycles.by_count) by_count[std::to_string(k)] = exact(v);
      out.details["des_distribution"] = by_count;
      if (!report.matches) {
        Json diff = Json::array();
        for (const auto& [set, v] : report.permutations.by_set) {
          const auto it = report.zeroed_cycles.by_set.find(set);
          const ExactInt other = it == report.zeroed_cycles.by_set.end() ? ExactInt(0) : it->second;
          if (other != v) diff.push_back({{"descents", set}, {"permutations", exact(v)}, {"zeroed_cycles", exact(other)}});
        }
        out.details["differences"] = diff;
      }
      out.text << (report.matches ? "verified" : "REFUTED") << " n=" << n << ": "
               << report.permutations.population() << " elements, " << report.permutations.by_set.size()
               << " descent sets\n";
      if (!report.matches) status = kExitRefuted;
    } else if (conj2_cmd->parsed()) {
      require(n_max >= 2, "conjecture2 requires n_max >= 2");
      out.input = {{"command", "conjecture2"}, {"n_max", n_max}};
      const auto report = check_conjecture2(n_max);
      out.result = report.verified ? "verified" : "refuted";
      Json cells = Json::array();
      out.text << "n\tN\ta_nN\teven\tdiv6\tclaimed\n";
      for (const auto& c : report.cells) {
        cells.push_back({{"n", c.n},
                         {"N", c.alphabet},
                         {"a_nN", exact(c.count)},
                         {"even", c.even},
                         {"divisible_by_6", c.divisible_by_6},
                         {"claimed", c.divisibility_claimed}});
        out.text << c.n << "\t" << c.alphabet << "\t" << c.count << "\t" << (c.even ? "yes" : "NO") << "\t"
                 << (c.divisible_by_6 ? "yes" : "no") << "\t" << (c.divisibility_claimed ? "yes" : "-") << "\n";
      }
      out.details["cells"] = cells;
      if (!tsv) out.text << (report.verified ? "verified" : "REFUTED") << "\n";
      if (!report.verified) status = kExitRefuted;
    } else if (xcheck_cmd->parsed()) {
      require(n_max >= 2 && alphabet_max >= 2, "xcheck requires n_max >= 2 and N_max >= 2");
      if (n_max > kDefaultEnumerationBound) {
        throw BoundExceeded("n_max=" + std::to_string(n_max) + " exceeds enumeration bound " +
                            std::to_string(kDefaultEnumerationBound));
      }
      for (int k = 2; k <= n_max; ++k) check_oracle_size(k, alphabet_max);
      out.input = {{"command", "xcheck"}, {"n_max", n_max}, {"N_max", alphabet_max}};
      bool agree = true;
      Json rows = Json::array();
      out.text << "n\tN\tclosed\trecurrence\tbrute\toracle\tagree\n";
      for (int k = 2; k <= n_max; ++k) {
        const auto row = enumerate_by_nmin(k, par);
        std::size_t previous = 0;
        for (int a = 2; a <= alphabet_max; ++a) {
          const std::size_t allowed = oracle_allowed(k, a, par).size();
          const ExactInt closed = count_a(k, a);
          const ExactInt rec = count_a_recurrence(k, a);
          const auto it = row.cells.find(a);
          const ExactInt brute = it == row.cells.end() ? ExactInt(0) : it->second.count;
          const ExactInt oracle = ExactInt(allowed - previous);
          previous = allowed;
          const bool same = closed == rec && closed == brute && closed == oracle;
          agree = agree && same;
          rows.push_back({{"n", k},
                          {"N", a},
                          {"closed", exact(closed)},
                          {"recurrence", exact(rec)},
                          {"brute", exact(brute)},
                          {"oracle", exact(oracle)},
                          {"agree", same}});
          out.text << k << "\t" << a << "\t" << closed << "\t" << rec << "\t" << brute << "\t" << oracle << "\t"
                   << (same ? "yes" : "NO") << "\n";
        }
      }
      out.result = agree ? "agree" : "disagree";
      out.details["rows"] = rows;
      if (!agree) status = kExitRefuted;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  out.emit();
  return status;
}
