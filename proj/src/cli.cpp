#include "zimin/cli.hpp"

#include "zimin/avoidance.hpp"
#include "zimin/core.hpp"
#include "zimin/error.hpp"
#include "zimin/fibonacci.hpp"
#include "zimin/oracle.hpp"
#include "zimin/pattern_search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

namespace zimin::cli {
namespace {

using json = nlohmann::ordered_json;

// Fibonacci embedding images are printed literally up to this total length.
constexpr std::uint64_t kLiteralImageLimit = 4096;

std::string dump(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

void validate_word(std::string_view w, bool raw) {
  if (raw) return;
  for (char c : w) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x20 || u > 0x7e) {
      std::ostringstream msg;
      msg << "non-printable byte 0x" << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(u)
          << " in word (use --raw to allow)";
      throw InvalidArgument(msg.str());
    }
  }
}

std::vector<Word> read_lines(std::istream& in) {
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) words.push_back(line);
  return words;
}

// Words from the positional argument ("-" reads stdin) or from --file.
struct WordSource {
  std::optional<std::string> word;
  std::string file;

  void attach(CLI::App* app) {
    app->add_option("word", word, "input word, or - for one word per line on stdin");
    app->add_option("--file", file, "read one word per line from PATH");
  }

  [[nodiscard]] std::vector<Word> load(std::istream& in, bool raw) const {
    std::vector<Word> words;
    if (!file.empty()) {
      if (word) throw InvalidArgument("give either WORD or --file, not both");
      std::ifstream f(file, std::ios::binary);
      if (!f) throw InvalidArgument("cannot open " + file);
      words = read_lines(f);
    } else if (!word) {
      throw InvalidArgument("missing WORD (or --file PATH, or - for stdin)");
    } else if (*word == "-") {
      words = read_lines(in);
    } else {
      words.push_back(*word);
    }
    for (const Word& w : words) validate_word(w, raw);
    return words;
  }
};

json morphism_json(const Morphism& h) {
  json m = json::object();
  for (int j = 1; j <= h.size(); ++j) m["x" + std::to_string(j)] = h.image(j);
  return m;
}

void print_morphism(std::ostream& out, const Morphism& h) {
  for (int j = 1; j <= h.size(); ++j) out << 'x' << j << '=' << h.image(j) << '\n';
}

json occurrence_json(const Occurrence& occ) {
  json j;
  j["found"] = true;
  j["start"] = occ.start;
  j["end"] = occ.end;
  j["rank"] = occ.rank;
  j["morphism"] = morphism_json(occ.witness);
  return j;
}

template <typename T>
void print_joined(std::ostream& out, const T& values) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ' ';
    out << +v;
    first = false;
  }
  out << '\n';
}

// Prints one JSON object per word, wrapped in {"results":[...]} for batches.
void emit_results(std::ostream& out, std::vector<json> results) {
  if (results.size() == 1) {
    out << dump(results.front()) << '\n';
  } else {
    json j;
    j["results"] = std::move(results);
    out << dump(j) << '\n';
  }
}

struct Options {
  bool json = false;
  bool raw = false;
  std::uint64_t seed = 0;
};

// --- ztype ------------------------------------------------------------------

struct ZtypeCommand {
  WordSource source;
  bool prefixes = false;
  std::optional<int> decompose_rank;
  bool stream = false;

  void attach(CLI::App* app) {
    source.attach(app);
    app->add_flag("--prefixes", prefixes, "print Ztype[1..n]");
    app->add_option("--decompose", decompose_rank, "print a morphism h with h(Z_K) = WORD")->check(CLI::PositiveNumber);
    app->add_flag("--stream", stream, "read symbols from stdin, print 'i B SB Ztype' per symbol");
  }

  void run_stream(const Options& opt, std::istream& in, std::ostream& out) const {
    BorderTracker tracker;
    json border = json::array();
    json short_border = json::array();
    json types = json::array();
    std::istreambuf_iterator<char> it(in);
    for (; it != std::istreambuf_iterator<char>(); ++it) {
      const char c = *it;
      if (!opt.raw && c == '\n') continue;
      validate_word(std::string_view(&c, 1), opt.raw);
      const auto step = tracker.push(c);
      if (opt.json) {
        border.push_back(step.border);
        short_border.push_back(step.short_border);
        types.push_back(step.ztype);
      } else {
        out << tracker.size() << ' ' << step.border << ' ' << step.short_border << ' ' << step.ztype << '\n';
      }
    }
    if (opt.json) {
      json j;
      j["length"] = tracker.size();
      j["border"] = std::move(border);
      j["short_border"] = std::move(short_border);
      j["ztype"] = std::move(types);
      out << dump(j) << '\n';
    }
  }

  void run(const Options& opt, std::istream& in, std::ostream& out) const {
    if (stream) {
      run_stream(opt, in, out);
      return;
    }
    std::vector<json> results;
    for (const Word& w : source.load(in, opt.raw)) {
      const auto types = ztype_prefixes(w);
      std::optional<Morphism> h;
      if (decompose_rank) h = decompose(w, *decompose_rank);
      if (opt.json) {
        json j;
        j["word"] = w;
        j["ztype"] = types.back();
        if (prefixes) j["prefixes"] = std::vector<int>(types.begin() + 1, types.end());
        if (h) j["morphism"] = morphism_json(*h);
        results.push_back(std::move(j));
        continue;
      }
      if (!prefixes && !h) out << types.back() << '\n';
      if (prefixes) print_joined(out, std::vector<int>(types.begin() + 1, types.end()));
      if (h) print_morphism(out, *h);
    }
    if (opt.json) emit_results(out, std::move(results));
  }
};

// --- search -----------------------------------------------------------------

struct SearchCommand {
  WordSource source;
  std::optional<int> rank;
  bool max = false;

  void attach(CLI::App* app) {
    source.attach(app);
    app->add_option("--rank", rank, "rank K of the Zimin pattern Z_K")->check(CLI::PositiveNumber);
    app->add_flag("--max", max, "report the largest Zimin type over all factors");
  }

  void run(const Options& opt, std::istream& in, std::ostream& out) const {
    if (!max && !rank) throw InvalidArgument("search: --rank K is required unless --max is given");
    std::vector<json> results;
    for (const Word& w : source.load(in, opt.raw)) {
      if (max) {
        const MaxFactor best = max_factor_ztype(w);
        json j;
        j["rank"] = best.rank;
        if (best.occurrence) {
          j["start"] = best.occurrence->start;
          j["end"] = best.occurrence->end;
          j["morphism"] = morphism_json(best.occurrence->witness);
        }
        results.push_back(std::move(j));
      } else if (const auto occ = search_zimin(w, *rank)) {
        results.push_back(occurrence_json(*occ));
      } else {
        results.push_back(json{{"found", false}});
      }
    }
    emit_results(out, std::move(results));
  }
};

// --- fib ----------------------------------------------------------------------

struct FibCommand {
  std::string query;
  std::uint64_t n = 0;

  void attach(CLI::App* app) {
    for (const char* q : {"ztype", "rep", "sb", "embed", "array", "prefix", "ratio"}) {
      CLI::App* sub = app->add_subcommand(q, std::string("Fibonacci-word query: ") + q);
      sub->add_option("N", n, "position / length")->required();
      sub->callback([this, q] { query = q; });
    }
    app->require_subcommand(1);
  }

  void run(const Options& opt, std::ostream& out) const {
    json j;
    j["n"] = n;
    if (query == "ztype") {
      const int value = zfib(n);
      j["ztype"] = value;
      if (!opt.json) out << value << '\n';
    } else if (query == "rep") {
      const FibRep rep = zeckendorf(n);
      j["rep"] = rep.digits();
      j["psi"] = psi(rep);
      if (!opt.json) out << rep.digits() << '\n';
    } else if (query == "sb") {
      const std::uint64_t value = sb_fib(n);
      j["sb"] = value;
      if (!opt.json) out << value << '\n';
    } else if (query == "embed") {
      run_embed(opt, out, j);
    } else if (query == "array") {
      const auto values = zfib_array(static_cast<std::size_t>(n));
      j["zfib"] = std::vector<int>(values.begin(), values.end());
      if (!opt.json) print_joined(out, values);
    } else if (query == "prefix") {
      const Word w = fib_prefix(static_cast<std::size_t>(n));
      j["prefix"] = w;
      if (!opt.json) out << w << '\n';
    } else if (query == "ratio") {
      const double r = fib_ratio(n);
      j["ratio"] = r;
      if (!opt.json) out << std::setprecision(12) << r << '\n';
    }
    if (opt.json) out << dump(j) << '\n';
  }

  void run_embed(const Options& opt, std::ostream& out, json& j) const {
    const FibEmbedding e = fib_embedding(n);
    std::uint64_t total = 0;
    for (int idx : e.word_index) total += fib_length(idx);
    std::optional<Morphism> literal;
    if (total <= kLiteralImageLimit) literal = e.materialize();

    j["rank"] = e.rank;
    json index = json::object();
    json images = json::object();
    for (int v = 1; v <= e.rank; ++v) {
      const std::string key = "x" + std::to_string(v);
      const int idx = e.word_index[static_cast<std::size_t>(v - 1)];
      index[key] = idx;
      images[key] = literal ? literal->image(v) : "F[" + std::to_string(idx) + "]";
    }
    j["morphism"] = images;
    j["fib_index"] = index;
    if (opt.json) return;
    out << e.rank << '\n';
    for (auto it = images.begin(); it != images.end(); ++it) {
      out << it.key() << '=' << it.value().get<std::string>() << '\n';
    }
  }
};

// --- avoid --------------------------------------------------------------------

struct AvoidCommand {
  std::string mode;
  int rank = 0;
  int alphabet = 0;
  SearchLimits limits;
  bool count_only = false;
  std::string out_path;

  void add_common(CLI::App* sub) {
    sub->add_option("--rank", rank, "Zimin rank n")->required()->check(CLI::PositiveNumber);
    sub->add_option("--alphabet", alphabet, "alphabet size k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--threads", limits.threads, "worker threads for the search");
    sub->add_option("--len-cap", limits.length_cap, "maximum explored word length");
    sub->add_option("--node-cap", limits.node_cap, "maximum number of search nodes");
  }

  void attach(CLI::App* app) {
    CLI::App* exact = app->add_subcommand("exact", "exact f(n,k) by exhaustive search");
    add_common(exact);
    exact->callback([this] { mode = "exact"; });

    CLI::App* minimal = app->add_subcommand("minimal", "enumerate minimal words of Zimin type n");
    add_common(minimal);
    minimal->add_flag("--count-only", count_only, "print only m(n,k)");
    minimal->add_option("--out", out_path, "write the words to PATH, one per line");
    minimal->callback([this] { mode = "minimal"; });

    CLI::App* bound = app->add_subcommand("bound", "best known value or bound for f(n,k)");
    add_common(bound);
    bound->callback([this] { mode = "bound"; });
    app->require_subcommand(1);
  }

  void run(const Options& opt, std::ostream& out) const {
    if (mode == "exact") {
      const AvoidanceStats s = f_exact(rank, alphabet, limits);
      json j;
      j["f"] = s.f_value;
      j["witness"] = *s.witness;
      out << dump(j) << '\n';
    } else if (mode == "minimal") {
      run_minimal(opt, out);
    } else {
      const AvoidanceStats s = f_bound(rank, alphabet, limits);
      json j;
      j["rank"] = s.rank;
      j["alphabet"] = s.alphabet;
      j["f"] = s.f_value;
      j["bound"] = s.exact ? "exact" : "upper";
      j["method"] = to_string(s.method);
      out << dump(j) << '\n';
    }
  }

  void run_minimal(const Options& opt, std::ostream& out) const {
    std::vector<Word> words;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) throw InvalidArgument("cannot open " + out_path);
    }
    MinimalSink sink;
    if (!count_only) {
      if (file.is_open()) {
        sink = [&file](std::string_view w) { file << w << '\n'; };
      } else {
        sink = [&words](std::string_view w) { words.emplace_back(w); };
      }
    }
    const std::uint64_t count = enumerate_minimal(rank, alphabet, sink, limits);
    if (opt.json) {
      json j;
      j["count"] = count;
      if (!count_only && !file.is_open()) j["words"] = words;
      out << dump(j) << '\n';
      return;
    }
    out << count << '\n';
    for (const Word& w : words) out << w << '\n';
  }
};

// --- oracle ---------------------------------------------------------------------

struct OracleCommand {
  std::string mode;
  WordSource type_source;
  WordSource embed_source;
  int rank = 0;

  void attach(CLI::App* app) {
    CLI::App* type = app->add_subcommand("ztype", "Zimin type by exhaustive decomposition");
    type_source.attach(type);
    type->callback([this] { mode = "ztype"; });
    CLI::App* embed = app->add_subcommand("embed", "does Z_K embed, by exhaustive factor scan");
    embed_source.attach(embed);
    embed->add_option("--rank", rank, "rank K")->required()->check(CLI::PositiveNumber);
    embed->callback([this] { mode = "embed"; });
    app->require_subcommand(1);
  }

  void run(const Options& opt, std::istream& in, std::ostream& out) const {
    std::vector<json> results;
    if (mode == "ztype") {
      for (const Word& w : type_source.load(in, opt.raw)) {
        const int t = oracle::ztype_brute(w);
        if (!opt.json) out << t << '\n';
        results.push_back(json{{"word", w}, {"ztype", t}});
      }
      if (opt.json) emit_results(out, std::move(results));
    } else {
      for (const Word& w : embed_source.load(in, opt.raw)) {
        results.push_back(json{{"found", oracle::embeds_zimin_brute(w, rank)}});
      }
      emit_results(out, std::move(results));
    }
  }
};

// --- repro ----------------------------------------------------------------------

struct ReproCommand {
  SearchLimits limits;

  void attach(CLI::App* app) {
    app->add_option("--threads", limits.threads, "worker threads for the rank-3 binary search");
  }

  int run(const Options& opt, std::ostream& out) const {
    struct Cell {
      std::string label;
      std::string expected;
      std::uint64_t expected_value;
      bool upper;
      std::uint64_t value;
      bool exact;
      std::string method;
    };
    std::vector<Cell> cells;
    const auto add = [&](std::string label, std::uint64_t expected, bool upper, std::uint64_t value, bool exact,
                         Method method) {
      cells.push_back(Cell{std::move(label), (upper ? "<= " : "") + std::to_string(expected), expected, upper, value,
                           exact, to_string(method)});
    };

    for (int k = 2; k <= 5; ++k) {
      const AvoidanceStats s = f_bound(1, k);
      add("f(1," + std::to_string(k) + ")", 1, false, s.f_value, s.exact, s.method);
    }
    for (int k = 2; k <= 5; ++k) {
      const AvoidanceStats closed = f2_closed(k);
      const AvoidanceStats searched = f_exact(2, k, limits);
      if (searched.f_value != closed.f_value) {
        throw Error("f(2," + std::to_string(k) + "): search and closed form disagree");
      }
      add("f(2," + std::to_string(k) + ")", 2 * static_cast<std::uint64_t>(k) + 1, false, searched.f_value, true,
          Method::exact);
    }
    const AvoidanceStats f32 = f_exact(3, 2, limits);
    add("f(3,2)", 29, false, f32.f_value, true, Method::exact);
    add("m(3,2)", 7882, false, *f32.m_value, true, Method::exact);
    add("m(2,2)", 6, false, m2_formula(2), true, Method::formula);
    const std::uint64_t reference_f3[] = {319, 3169, 37991};
    for (int k = 3; k <= 5; ++k) {
      add("f(3," + std::to_string(k) + ")", reference_f3[k - 3], true,
          f_upper_bound(3, 2 * static_cast<std::uint64_t>(k) + 1, m2_formula(k)), false, Method::recursion);
    }
    add("f(4,2)", 236489, true, f_upper_bound(4, f32.f_value, *f32.m_value), false, Method::recursion);

    bool all = true;
    json rows = json::array();
    for (const Cell& c : cells) {
      const bool match = c.value == c.expected_value && c.exact == !c.upper;
      all = all && match;
      rows.push_back(json{{"cell", c.label},
                          {"reference", c.expected},
                          {"computed", c.value},
                          {"bound", c.exact ? "exact" : "upper"},
                          {"method", c.method},
                          {"match", match}});
      if (!opt.json) {
        out << std::left << std::setw(8) << c.label << " reference " << std::setw(10) << c.expected << " computed "
            << std::setw(8) << c.value << ' ' << std::setw(6) << (c.exact ? "exact" : "upper") << ' '
            << std::setw(10) << c.method << (match ? "OK" : "MISMATCH") << '\n';
      }
    }
    if (opt.json) {
      json j;
      j["cells"] = std::move(rows);
      j["all_match"] = all;
      out << dump(j) << '\n';
    } else {
      out << (all ? "all cells match" : "MISMATCHES FOUND") << '\n';
    }
    return all ? kOk : kFailure;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zimin types, Zimin pattern search, Fibonacci-word queries and avoidance bounds", "zimin"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit a single JSON object");
  app.add_flag("--raw", opt.raw, "accept arbitrary bytes in words");
  app.add_option("--seed", opt.seed, "reserved; accepted and ignored");

  ZtypeCommand ztype_cmd;
  SearchCommand search_cmd;
  FibCommand fib_cmd;
  AvoidCommand avoid_cmd;
  OracleCommand oracle_cmd;
  ReproCommand repro_cmd;
  CLI::App* ztype_app = app.add_subcommand("ztype", "Zimin type of a word");
  CLI::App* search_app = app.add_subcommand("search", "search for a Zimin pattern in a word");
  CLI::App* fib_app = app.add_subcommand("fib", "queries on the infinite Fibonacci word");
  CLI::App* avoid_app = app.add_subcommand("avoid", "avoidance values f(n,k) and minimal words");
  CLI::App* oracle_app = app.add_subcommand("oracle", "brute-force reference answers");
  CLI::App* repro_app = app.add_subcommand("repro", "recompute the f(n,k) table and compare");
  ztype_cmd.attach(ztype_app);
  search_cmd.attach(search_app);
  fib_cmd.attach(fib_app);
  avoid_cmd.attach(avoid_app);
  oracle_cmd.attach(oracle_app);
  repro_cmd.attach(repro_app);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (ztype_app->parsed()) {
      ztype_cmd.run(opt, in, out);
    } else if (search_app->parsed()) {
      search_cmd.run(opt, in, out);
    } else if (fib_app->parsed()) {
      fib_cmd.run(opt, out);
    } else if (avoid_app->parsed()) {
      avoid_cmd.run(opt, out);
    } else if (oracle_app->parsed()) {
      oracle_cmd.run(opt, in, out);
    } else if (repro_app->parsed()) {
      return repro_cmd.run(opt, out);
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace zimin::cli
