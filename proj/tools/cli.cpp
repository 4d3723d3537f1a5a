#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpa/cardinality.hpp"
#include "lpa/codec.hpp"
#include "lpa/parallel.hpp"
#include "lpa/segmented.hpp"
#include "lpa/word_io.hpp"

namespace lpa::cli {

namespace {

using Report = nlohmann::ordered_json;

// Plain rendering of a flat report: one key=value per line. Nested arrays and
// objects collapse onto the line so the JSON and plain forms carry the same
// fields.
std::string plain_value(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + plain_value(v[i]);
    return s;
  }
  if (v.is_object()) {
    std::string s;
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      s += (first ? "" : ",") + k + ":" + plain_value(x);
      first = false;
    }
    return s;
  }
  if (v.is_null()) return "n/a";
  return v.dump();
}

void emit(const Report& r, bool json, std::ostream& out) {
  if (json) {
    out << r.dump() << '\n';
    return;
  }
  for (const auto& [k, v] : r.items()) out << k << '=' << plain_value(v) << '\n';
}

Report big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Report big(const std::optional<BigInt>& v) { return v ? big(*v) : Report(nullptr); }

class Streams {
 public:
  Streams(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::istream& input(const std::string& path) {
    if (path.empty() || path == "-") return in_;
    auto f = std::make_unique<std::ifstream>(path);
    if (!*f) throw UsageError("cannot open input file '" + path + "'");
    files_in_.push_back(std::move(f));
    return *files_in_.back();
  }

  std::ostream& output(const std::string& path) {
    if (path.empty() || path == "-") return out_;
    auto f = std::make_unique<std::ofstream>(path);
    if (!*f) throw UsageError("cannot open output file '" + path + "'");
    files_out_.push_back(std::move(f));
    return *files_out_.back();
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::vector<std::unique_ptr<std::ifstream>> files_in_;
  std::vector<std::unique_ptr<std::ofstream>> files_out_;
};

std::vector<Word> words_of_length(const std::vector<WordLine>& lines, std::size_t length) {
  std::vector<Word> words;
  words.reserve(lines.size());
  for (const auto& wl : lines) {
    if (wl.word.size() != length) {
      throw UsageError("line " + std::to_string(wl.line) + ": expected " + std::to_string(length) +
                       " symbols, got " + std::to_string(wl.word.size()));
    }
    words.push_back(wl.word);
  }
  return words;
}

struct CodeFlags {
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t l = 0;
  std::string in;
  std::string out;
  std::string trace;
  bool json = false;
};

void add_code_flags(CLI::App* cmd, CodeFlags& f, bool with_window) {
  cmd->add_option("--q", f.q, "alphabet size")->required();
  cmd->add_option("--n", f.n, "message length")->required();
  cmd->add_option("--p", f.p, "forbidden least-period bound")->required();
  if (with_window) cmd->add_option("--l", f.l, "window length")->required();
}

Report params_report(const LpaParams& params) {
  const std::size_t floor_l = min_window_feasible(params.q(), params.n(), params.p());
  Report r;
  r["q"] = params.q();
  r["n"] = params.n();
  r["p"] = params.p();
  r["l"] = params.l();
  r["index_width"] = params.index_width();
  r["redundancy"] = 1;
  r["codeword_length"] = params.codeword_length();
  r["min_feasible_l"] = floor_l;
  r["gap"] = static_cast<std::int64_t>(params.l()) - static_cast<std::int64_t>(floor_l);
  return r;
}

int cmd_encode(const CodeFlags& f, Streams& io) {
  const auto params = derive_params(f.q, f.n, f.p);
  const auto words = words_of_length(read_words(io.input(f.in), f.q), f.n);
  const auto results = encode_batch(words, params, !f.trace.empty());
  auto& out = io.output(f.out);
  std::ostream* trace = f.trace.empty() ? nullptr : &io.output(f.trace);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.word) throw std::logic_error("encoder failed: " + r.error);
    out << r.word->to_string() << '\n';
    if (trace) {
      for (std::size_t s = 0; s < r.steps.size(); ++s) {
        *trace << "word=" << i + 1 << " step=" << s + 1 << " index=" << r.steps[s].index
               << " period=" << r.steps[s].least_period
               << " kernel=" << r.steps[s].kernel.to_string() << '\n';
      }
    }
  }
  return kOk;
}

int cmd_decode(const CodeFlags& f, Streams& io) {
  const auto params = derive_params(f.q, f.n, f.p);
  const auto words = words_of_length(read_words(io.input(f.in), f.q), params.codeword_length());
  const auto results = decode_batch(words, params);
  auto& out = io.output(f.out);
  int code = kOk;
  for (const auto& r : results) {
    if (r.word) {
      out << r.word->to_string() << '\n';
    } else {
      out << "!error " << r.error << '\n';
      code = kCorrupt;
    }
  }
  return code;
}

struct CheckFlags {
  unsigned q = 2;
  std::optional<std::size_t> l;
  std::optional<std::size_t> p;
  std::optional<std::size_t> rll;
  std::string in;
  bool json = false;
};

int cmd_check(const CheckFlags& f, Streams& io, std::ostream& out) {
  if (f.l.has_value() != f.p.has_value()) throw UsageError("--l and --p go together");
  if (!f.l && !f.rll) throw UsageError("nothing to check: give --l/--p and/or --rll");
  const auto lines = read_words(io.input(f.in), f.q);
  bool all_valid = true;
  Report verdicts = Report::array();
  for (const auto& wl : lines) {
    Report v;
    v["line"] = wl.line;
    bool valid = true;
    if (f.l) {
      if (auto bad = first_violation(wl.word, *f.l, *f.p)) {
        valid = false;
        v["index"] = bad->index;
        v["period"] = bad->least_period;
      }
    }
    if (f.rll && !is_rll(wl.word, *f.rll)) {
      valid = false;
      v["rll"] = "zero run too long";
    }
    v["valid"] = valid;
    all_valid = all_valid && valid;
    if (f.json) {
      verdicts.push_back(v);
    } else if (valid) {
      out << "valid\n";
    } else {
      out << "invalid";
      if (v.contains("index")) out << " index=" << v["index"] << " period=" << v["period"];
      if (v.contains("rll")) out << " rll=violated";
      out << '\n';
    }
  }
  if (f.json) {
    Report r;
    r["all_valid"] = all_valid;
    r["words"] = verdicts;
    out << r.dump() << '\n';
  }
  return all_valid ? kOk : kViolation;
}

struct CountFlags {
  std::string family = "A";
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t l = 0;
  std::size_t p = 0;
  std::size_t k = 0;
  std::string mode = "both";
  std::uint64_t budget = kDefaultBudget;
  bool json = false;
};

int cmd_count(const CountFlags& f, std::ostream& out) {
  CountQuery query{parse_family(f.family), f.q, f.n, f.l, f.p, f.k};
  CountMode mode;
  if (f.mode == "brute") {
    mode = CountMode::Brute;
  } else if (f.mode == "formula") {
    mode = CountMode::Formula;
  } else if (f.mode == "both") {
    mode = CountMode::Both;
  } else {
    throw UsageError("--mode must be brute, formula or both");
  }
  const auto report = make_report(query, mode, f.budget);
  Report r;
  r["family"] = to_string(query.family);
  r["q"] = query.q;
  r["n"] = query.n;
  if (query.family == Family::R) {
    r["k"] = query.k;
  } else {
    r["l"] = query.l;
    r["p"] = query.p;
  }
  r["mode"] = f.mode;
  if (mode != CountMode::Formula) r["exact"] = big(report.exact);
  if (mode != CountMode::Brute) {
    r["formula"] = big(report.formula);
    r["formula_source"] = report.formula_source.empty() ? Report(nullptr) : Report(report.formula_source);
    if (query.family == Family::A) {
      r["lower_bound"] = big(report.lower_bound);
      r["upper_bound"] = big(report.upper_bound);
      r["upper_source"] = report.upper_source.empty() ? Report(nullptr) : Report(report.upper_source);
    }
  }
  r["consistent"] = report.consistent();
  emit(r, f.json, out);
  return report.consistent() ? kOk : kViolation;
}

struct SegFlags {
  std::string action;
  std::string variant = "auto";
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t l = 0;
  std::size_t p = 0;
  std::string in;
  std::string out;
  bool json = false;
};

Report plan_report(const SegmentedParams& sp) {
  Report r;
  r["variant"] = std::string(to_string(sp.variant));
  r["q"] = sp.q;
  r["n"] = sp.n;
  r["l"] = sp.l;
  r["p"] = sp.p;
  r["k"] = sp.k;
  r["segment_window"] = sp.segment_window;
  r["segment_lengths"] = sp.segment_lengths;
  r["redundancy"] = sp.total_redundancy;
  r["codeword_length"] = sp.codeword_length();
  return r;
}

int cmd_segmented(const SegFlags& f, Streams& io, std::ostream& out) {
  SegmentedParams sp;
  std::optional<Selection> selection;
  if (f.variant == "auto") {
    selection = select_construction(f.q, f.n, f.l, f.p);
    sp = selection->chosen;
  } else {
    sp = plan(f.q, f.n, f.l, f.p, parse_variant(f.variant));
  }

  if (f.action == "plan") {
    Report r = plan_report(sp);
    if (selection) {
      Report candidates = Report::object();
      for (const auto& c : selection->candidates) {
        candidates[std::string(to_string(c.variant))] = c.total_redundancy;
      }
      r["candidates"] = candidates;
      r["closed_form_agrees"] = selection->closed_form_agrees;
    }
    emit(r, f.json, out);
    return kOk;
  }

  const bool encoding = f.action == "encode";
  const auto words =
      words_of_length(read_words(io.input(f.in), f.q), encoding ? sp.n : sp.codeword_length());
  auto& sink = io.output(f.out);
  int code = kOk;
  for (const auto& w : words) {
    if (encoding) {
      sink << encode_segmented(w, sp).to_string() << '\n';
      continue;
    }
    try {
      sink << decode_segmented(w, sp).to_string() << '\n';
    } catch (const CorruptCodeword& e) {
      sink << "!error " << e.what() << '\n';
      code = kCorrupt;
    }
  }
  return code;
}

struct StatsFlags {
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t p = 0;
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  std::string in;
  std::uint64_t budget = kSweepBudget;
  bool json = false;
};

int cmd_stats(const StatsFlags& f, Streams& io, std::ostream& out) {
  const int sources = (f.exhaustive ? 1 : 0) + (f.samples ? 1 : 0) + (f.in.empty() ? 0 : 1);
  if (sources != 1) throw UsageError("choose exactly one of --exhaustive, --samples, --in");
  const auto params = derive_params(f.q, f.n, f.p);
  StepStatistics stats;
  std::string source;
  if (f.exhaustive) {
    stats = exhaustive_step_statistics(params, f.budget);
    source = "exhaustive";
  } else if (f.samples) {
    if (*f.samples == 0) throw UsageError("--samples must be positive");
    stats = sampled_step_statistics(params, *f.samples, f.seed);
    source = "sampled";
  } else {
    const auto words = words_of_length(read_words(io.input(f.in), f.q), f.n);
    if (words.empty()) throw UsageError("input file holds no words");
    stats = step_statistics(params, words);
    source = "file";
  }

  Report r;
  r["q"] = f.q;
  r["n"] = f.n;
  r["p"] = f.p;
  r["l"] = params.l();
  r["source"] = source;
  if (f.samples) r["seed"] = f.seed;
  r["words"] = stats.words;
  r["total_steps"] = stats.total_steps;
  r["mean"] = stats.mean();
  r["max"] = stats.max_steps;
  Report hist = Report::object();
  for (const auto& [steps, count] : stats.histogram) hist[std::to_string(steps)] = count;
  r["histogram"] = hist;
  r["bound"] = f.q - 1;
  const bool within = stats.mean_at_most(f.q - 1);
  r["within_bound"] = within;
  emit(r, f.json, out);
  return (f.exhaustive && !within) ? kViolation : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Codes avoiding small periods in every window"};
  app.require_subcommand(1);

  CodeFlags params_f;
  auto* params_cmd = app.add_subcommand("params", "derive the window length for a single-redundancy code");
  add_code_flags(params_cmd, params_f, false);
  params_cmd->add_flag("--json", params_f.json);

  CodeFlags enc_f;
  auto* enc_cmd = app.add_subcommand("encode", "encode a word file line by line");
  add_code_flags(enc_cmd, enc_f, false);
  enc_cmd->add_option("--in", enc_f.in, "input word file (default stdin)");
  enc_cmd->add_option("--out", enc_f.out, "output word file (default stdout)");
  enc_cmd->add_option("--trace", enc_f.trace, "write one line per repair step to this file");

  CodeFlags dec_f;
  auto* dec_cmd = app.add_subcommand("decode", "decode a word file line by line");
  add_code_flags(dec_cmd, dec_f, false);
  dec_cmd->add_option("--in", dec_f.in, "input word file (default stdin)");
  dec_cmd->add_option("--out", dec_f.out, "output word file (default stdout)");

  CheckFlags check_f;
  auto* check_cmd = app.add_subcommand("check", "test words against the window constraints");
  check_cmd->add_option("--q", check_f.q, "alphabet size")->required();
  check_cmd->add_option("--l", check_f.l, "window length");
  check_cmd->add_option("--p", check_f.p, "forbidden least-period bound");
  check_cmd->add_option("--rll", check_f.rll, "forbid zero runs of this length");
  check_cmd->add_option("--in", check_f.in, "input word file (default stdin)");
  check_cmd->add_flag("--json", check_f.json);

  CountFlags count_f;
  auto* count_cmd = app.add_subcommand("count", "count constrained words and compare with formulas");
  count_cmd->add_option("--family", count_f.family, "A, B or R")->required();
  count_cmd->add_option("--q", count_f.q)->required();
  count_cmd->add_option("--n", count_f.n)->required();
  count_cmd->add_option("--l", count_f.l);
  count_cmd->add_option("--p", count_f.p);
  count_cmd->add_option("--k", count_f.k, "zero-run bound (family R)");
  count_cmd->add_option("--mode", count_f.mode, "brute, formula or both");
  count_cmd->add_option("--budget", count_f.budget, "largest q^n to enumerate");
  count_cmd->add_flag("--json", count_f.json);

  SegFlags seg_f;
  auto* seg_cmd = app.add_subcommand("segmented", "segmented codes for shorter windows");
  seg_cmd->add_option("action", seg_f.action, "plan, encode or decode")
      ->required()
      ->check(CLI::IsMember({"plan", "encode", "decode"}));
  seg_cmd->add_option("--variant", seg_f.variant, "half, sep, glue or auto")
      ->check(CLI::IsMember({"half", "sep", "glue", "auto"}));
  seg_cmd->add_option("--q", seg_f.q)->required();
  seg_cmd->add_option("--n", seg_f.n)->required();
  seg_cmd->add_option("--l", seg_f.l)->required();
  seg_cmd->add_option("--p", seg_f.p)->required();
  seg_cmd->add_option("--in", seg_f.in);
  seg_cmd->add_option("--out", seg_f.out);
  seg_cmd->add_flag("--json", seg_f.json);

  StatsFlags stats_f;
  auto* stats_cmd = app.add_subcommand("stats", "repair-step statistics of the encoder");
  stats_cmd->add_option("--q", stats_f.q)->required();
  stats_cmd->add_option("--n", stats_f.n)->required();
  stats_cmd->add_option("--p", stats_f.p)->required();
  stats_cmd->add_flag("--exhaustive", stats_f.exhaustive, "all q^n messages");
  stats_cmd->add_option("--samples", stats_f.samples, "number of random messages");
  stats_cmd->add_option("--seed", stats_f.seed, "seed for --samples");
  stats_cmd->add_option("--in", stats_f.in, "messages from a word file");
  stats_cmd->add_option("--budget", stats_f.budget, "largest q^n for --exhaustive");
  stats_cmd->add_flag("--json", stats_f.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Streams io(in, out);
  try {
    if (*params_cmd) {
      emit(params_report(derive_params(params_f.q, params_f.n, params_f.p)), params_f.json, out);
      return kOk;
    }
    if (*enc_cmd) return cmd_encode(enc_f, io);
    if (*dec_cmd) return cmd_decode(dec_f, io);
    if (*check_cmd) return cmd_check(check_f, io, out);
    if (*count_cmd) return cmd_count(count_f, out);
    if (*seg_cmd) return cmd_segmented(seg_f, io, out);
    if (*stats_cmd) return cmd_stats(stats_f, io, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (estimated " << e.estimated_cost() << " words)\n";
    return kBudget;
  } catch (const CorruptCodeword& e) {
    err << "error: " << e.what() << '\n';
    return kCorrupt;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleParams& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lpa::cli
