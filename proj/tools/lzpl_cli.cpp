#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lzpl/codec.hpp"
#include "lzpl/core.hpp"
#include "lzpl/dictionary.hpp"
#include "lzpl/generators.hpp"
#include "lzpl/parse_graph.hpp"
#include "lzpl/parsers.hpp"

using json = nlohmann::json;
using namespace lzpl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    return Bytes(s.begin(), s.end());
}

void write_file(const std::string& path, const Bytes& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
}

std::string hex(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::uint8_t c : b) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

std::size_t parse_window(const std::string& s) {
    if (s == "unbounded") return kUnbounded;
    return std::stoull(s);
}

// LZPL_SCALE_LIMITS="text=256,window=64,graph=4096,oracle=20"
ScaleLimits limits_from_env() {
    ScaleLimits limits;
    const char* env = std::getenv("LZPL_SCALE_LIMITS");
    if (!env) return limits;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("bad LZPL_SCALE_LIMITS entry: " + item);
        std::string key = item.substr(0, eq);
        std::size_t value = std::stoull(item.substr(eq + 1));
        if (key == "text") limits.checker_text = value;
        else if (key == "window") limits.checker_window = value;
        else if (key == "graph") limits.graph_text = value;
        else if (key == "oracle") limits.oracle_text = value;
        else throw Error("unknown LZPL_SCALE_LIMITS key: " + key);
    }
    return limits;
}

struct FamilyOptions {
    std::string family = "lz77";
    std::string window = "unbounded";
    std::string dict_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "Dictionary family")
            ->check(CLI::IsMember({"lz77", "lz78", "static"}))
            ->capture_default_str();
        cmd->add_option("--window", window, "LZ77 window size or 'unbounded'")
            ->capture_default_str();
        cmd->add_option("--dict", dict_file, "Static dictionary phrase file");
    }

    DictionaryConfig config() const {
        if (family == "lz77") return DictionaryConfig::lz77(parse_window(window));
        if (family == "lz78") return DictionaryConfig::lz78();
        if (dict_file.empty())
            throw CLI::ValidationError("--dict", "static family requires a phrase file");
        return DictionaryConfig::static_dict(load_static_phrases(dict_file));
    }
};

json witness_json(const PropertyWitness& w) {
    return {{"time", w.time},
            {"phrase_hex", hex(w.phrase)},
            {"index", w.index},
            {"violation", to_string(w.violation)}};
}

std::vector<PathEdge> parsing_to_path(const Parsing& parsing) {
    std::vector<PathEdge> path;
    for (std::size_t i = 0; i < parsing.tokens.size(); ++i) {
        const Token& t = parsing.tokens[i];
        std::size_t from = parsing.starts[i];
        path.push_back({from, from + t.span(),
                        t.is_literal() ? EdgeKind::Literal : EdgeKind::Dictionary});
    }
    return path;
}

Parsing run_strategy(const std::string& strategy, const DictionaryConfig& config,
                     const Bytes& text, const ScaleLimits& limits) {
    if (strategy == "greedy") return greedy_parse(config, text);
    if (strategy == "optimal") return optimal_parse(config, text, limits);
    if (strategy == "flexible") return flexible_parse(config, text);
    return reverse_greedy_parse(config, text);
}

// --- parse ---------------------------------------------------------------

int cmd_parse(const std::string& input, const FamilyOptions& fam, const std::string& strategy,
              const std::string& format, bool show_tokens, const ScaleLimits& limits) {
    if (strategy == "reverse" && fam.family != "static")
        throw CLI::ValidationError("--strategy", "reverse requires --family static");
    Bytes text = read_file(input);
    DictionaryConfig config = fam.config();
    Parsing parsing = run_strategy(strategy, config, text, limits);
    ParseStats s = stats(parsing);

    if (format == "text") {
        std::cout << "file: " << input << "\n"
                  << "family: " << fam.family << "\n"
                  << "strategy: " << strategy << "\n"
                  << "token_count: " << s.token_count << "\n"
                  << "pointer_count: " << s.pointer_count << "\n"
                  << "literal_count: " << s.literal_count << "\n";
    } else if (format == "csv") {
        std::cout << "file,family,strategy,token_count,pointer_count,literal_count\n"
                  << input << "," << fam.family << "," << strategy << "," << s.token_count
                  << "," << s.pointer_count << "," << s.literal_count << "\n";
    } else {
        json report = {{"file", input},
                       {"family", fam.family},
                       {"strategy", strategy},
                       {"token_count", s.token_count},
                       {"pointer_count", s.pointer_count},
                       {"literal_count", s.literal_count}};
        if (show_tokens) {
            json tokens = json::array();
            for (const Token& t : parsing.tokens) {
                if (t.is_literal())
                    tokens.push_back({{"literal", t.symbol}});
                else
                    tokens.push_back({{"offset", t.offset}, {"length", t.length}});
            }
            report["tokens"] = tokens;
        }
        std::cout << report.dump(2) << "\n";
        return kExitOk;
    }
    if (show_tokens && format != "json") {
        for (const Token& t : parsing.tokens) {
            if (t.is_literal())
                std::cout << "L " << static_cast<int>(t.symbol) << "\n";
            else
                std::cout << "P " << t.offset << " " << t.length << "\n";
        }
    }
    return kExitOk;
}

// --- verify --------------------------------------------------------------

struct VerifyStats {
    std::size_t cases = 0;
    std::size_t suffix_checks = 0;
    std::size_t edge_checks = 0;
    std::size_t oracle_checks = 0;
    json failures = json::array();
};

void verify_one(const DictionaryConfig& config, const Bytes& text, const ScaleLimits& limits,
                VerifyStats& vs) {
    ++vs.cases;
    json entry = {{"text_hex", hex(text)}, {"len", text.size()}};

    bool checker_in_scale =
        text.size() <= limits.checker_text &&
        (config.family != Family::LZ77Sliding ||
         std::min(config.window_h, text.size()) <= limits.checker_window);
    if (checker_in_scale) {
        ++vs.suffix_checks;
        PropertyReport r = check_dynamic_suffix_closed(config, text, limits);
        if (!r.holds) {
            entry["check"] = "dynamic_suffix_closed";
            entry["witness"] = witness_json(*r.witness);
            vs.failures.push_back(entry);
            return;
        }
    }
    if (text.size() <= limits.graph_text) {
        ParseGraph graph = build_graph(config, text, limits);
        if (config.family == Family::LZ77Sliding) {
            ++vs.edge_checks;
            PropertyReport r = check_suffix_edge_closure(graph);
            if (!r.holds) {
                entry["check"] = "suffix_edge_closure";
                entry["witness"] = witness_json(*r.witness);
                vs.failures.push_back(entry);
                return;
            }
        }
        std::size_t greedy = greedy_parse(config, text).size();
        std::size_t optimal = shortest_path(graph).size();
        if (greedy != optimal) {
            entry["check"] = "greedy_equals_optimal";
            entry["greedy_tokens"] = greedy;
            entry["optimal_tokens"] = optimal;
            vs.failures.push_back(entry);
            return;
        }
        if (text.size() <= limits.oracle_text) {
            ++vs.oracle_checks;
            std::size_t oracle = brute_force_optimal(config, text, limits).min_tokens;
            if (oracle != optimal) {
                entry["check"] = "optimal_equals_brute_force";
                entry["optimal_tokens"] = optimal;
                entry["oracle_tokens"] = oracle;
                vs.failures.push_back(entry);
            }
        }
    }
}

int cmd_verify(const std::string& input, std::size_t random_count, std::size_t len,
               std::size_t alphabet, std::uint64_t seed, const std::string& generator,
               const FamilyOptions& fam, const ScaleLimits& limits) {
    DictionaryConfig config = fam.config();
    VerifyStats vs;
    if (!input.empty()) {
        verify_one(config, read_file(input), limits, vs);
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < random_count; ++i) {
            std::size_t l = len == 0 ? 0 : 1 + i % len;
            Bytes text;
            if (generator == "iid" || (generator == "mixed" && i % 2 == 0))
                text = gen_iid(rng, l, alphabet);
            else
                text = gen_repetitive(rng, l, alphabet);
            verify_one(config, text, limits, vs);
        }
    }
    json report = {{"family", fam.family},
                   {"cases", vs.cases},
                   {"dynamic_suffix_checks", vs.suffix_checks},
                   {"edge_closure_checks", vs.edge_checks},
                   {"oracle_checks", vs.oracle_checks},
                   {"failures", vs.failures},
                   {"holds", vs.failures.empty()}};
    std::cout << report.dump(2) << "\n";
    return vs.failures.empty() ? kExitOk : kExitViolation;
}

// --- graph ---------------------------------------------------------------

int cmd_graph(const std::string& input, const FamilyOptions& fam, const std::string& highlight,
              const ScaleLimits& limits) {
    Bytes text = read_file(input);
    DictionaryConfig config = fam.config();
    ParseGraph graph = build_graph(config, text, limits);
    if (highlight.empty()) {
        std::cout << export_dot(graph);
        return kExitOk;
    }
    Parsing parsing = highlight == "greedy" ? greedy_parse(config, text)
                                            : optimal_parse(config, text, limits);
    auto path = parsing_to_path(parsing);
    std::cout << export_dot(graph, &path);
    return kExitOk;
}

// --- compress / decompress ----------------------------------------------

Strategy to_strategy(const std::string& s) {
    if (s == "greedy") return Strategy::Greedy;
    if (s == "optimal") return Strategy::Optimal;
    return Strategy::Flexible;
}

int cmd_compress(const std::string& input, const std::string& output, unsigned offset_bits,
                 unsigned length_bits, const std::string& strategy, const ScaleLimits& limits) {
    Bytes text = read_file(input);
    EncodeResult r = encode(text, CodecParams{offset_bits, length_bits}, to_strategy(strategy),
                            limits);
    write_file(output, r.stream);
    json report = {{"input", input},
                   {"output", output},
                   {"original_bytes", text.size()},
                   {"stream_bytes", r.stream.size()},
                   {"token_count", r.stats.token_count},
                   {"pointer_count", r.stats.pointer_count},
                   {"literal_count", r.stats.literal_count},
                   {"payload_bits", r.stats.encoded_bits}};
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int cmd_decompress(const std::string& input, const std::string& output) {
    Bytes text = decode(read_file(input));
    write_file(output, text);
    std::cout << "decoded_bytes: " << text.size() << "\n";
    return kExitOk;
}

// --- search --------------------------------------------------------------

int cmd_search(const FamilyOptions& fam, std::size_t alphabet, std::size_t max_len,
               std::size_t budget, std::uint64_t seed) {
    DictionaryConfig config = fam.config();
    GapSearchResult r = search_greedy_gap(config, alphabet, max_len, budget, seed);
    json report = {{"family", fam.family},
                   {"explored", r.explored},
                   {"found", r.gap.has_value()}};
    if (r.gap) {
        report["text_hex"] = hex(r.gap->text);
        report["greedy_tokens"] = r.gap->greedy_tokens;
        report["optimal_tokens"] = r.gap->optimal_tokens;
    }
    std::cout << report.dump(2) << "\n";
    return kExitOk;  // a report, not a failure
}

// --- bench ---------------------------------------------------------------

int cmd_bench(const std::string& corpus, const FamilyOptions& fam,
              const std::string& windows_csv, const std::string& strategies_csv,
              const ScaleLimits& limits) {
    std::vector<std::string> windows;
    std::vector<std::string> strategies;
    {
        std::stringstream ss(windows_csv);
        std::string item;
        while (std::getline(ss, item, ',')) windows.push_back(item);
    }
    {
        std::stringstream ss(strategies_csv);
        std::string item;
        while (std::getline(ss, item, ',')) strategies.push_back(item);
    }

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::cout << "file,family,window,strategy,tokens,payload_bits,wall_time_ms,error\n";
    for (const auto& file : files) {
        Bytes text;
        try {
            text = read_file(file.string());
        } catch (const Error& e) {
            std::cout << file.filename().string() << "," << fam.family << ",,,,,," << e.what()
                      << "\n";
            continue;
        }
        for (const auto& window : windows) {
            DictionaryConfig config = fam.family == "lz78"
                                          ? DictionaryConfig::lz78()
                                          : DictionaryConfig::lz77(parse_window(window));
            for (const auto& strategy : strategies) {
                auto begin = std::chrono::steady_clock::now();
                std::string error;
                std::size_t tokens = 0;
                std::size_t bits = 0;
                try {
                    Parsing p = run_strategy(strategy, config, text, limits);
                    ParseStats s = stats(p);
                    tokens = s.token_count;
                    // informational size: offset field sized to the window,
                    // 16-bit length field
                    unsigned w_bits = 24;
                    if (config.window_h != kUnbounded) {
                        w_bits = 1;
                        while ((std::size_t{1} << w_bits) < config.window_h && w_bits < 24)
                            ++w_bits;
                    }
                    bits = payload_bits(s, CodecParams{w_bits, 16});
                } catch (const Error& e) {
                    error = e.what();
                }
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - begin)
                              .count();
                std::cout << file.filename().string() << "," << fam.family << "," << window
                          << "," << strategy << ",";
                if (error.empty())
                    std::cout << tokens << "," << bits;
                else
                    std::cout << ",";
                std::cout << "," << ms << "," << error << "\n";
            }
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LZ parsing laboratory: dictionary parsers, property checkers, LZSS codec"};
    app.require_subcommand(1);

    ScaleLimits limits;
    try {
        limits = limits_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    app.add_option("--max-check-text", limits.checker_text, "Property checker text bound");
    app.add_option("--max-check-window", limits.checker_window, "Property checker window bound");
    app.add_option("--max-graph-text", limits.graph_text, "Parse graph text bound");
    app.add_option("--max-oracle-text", limits.oracle_text, "Brute-force oracle text bound");

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "Parse a file and report token statistics");
    std::string parse_input, parse_strategy = "greedy", parse_format = "json";
    bool parse_tokens = false;
    FamilyOptions parse_fam;
    parse_cmd->add_option("input", parse_input, "Input file")->required();
    parse_fam.attach(parse_cmd);
    parse_cmd->add_option("--strategy", parse_strategy)
        ->check(CLI::IsMember({"greedy", "optimal", "flexible", "reverse"}))
        ->capture_default_str();
    parse_cmd->add_option("--format", parse_format)
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    parse_cmd->add_flag("--tokens", parse_tokens, "Include the token list");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the property battery");
    std::string verify_input, verify_generator = "mixed";
    std::size_t verify_random = 0, verify_len = 64, verify_alphabet = 2;
    std::uint64_t verify_seed = 1;
    FamilyOptions verify_fam;
    verify_cmd->add_option("input", verify_input, "Input file (omit to use --random)");
    verify_cmd->add_option("--random", verify_random, "Number of random texts");
    verify_cmd->add_option("--len", verify_len, "Maximum random text length")
        ->capture_default_str();
    verify_cmd->add_option("--alphabet", verify_alphabet, "Alphabet size")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "RNG seed")->capture_default_str();
    verify_cmd->add_option("--generator", verify_generator)
        ->check(CLI::IsMember({"iid", "repetitive", "mixed"}))
        ->capture_default_str();
    verify_fam.attach(verify_cmd);

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "Export the parse graph as DOT");
    std::string graph_input, graph_highlight;
    FamilyOptions graph_fam;
    graph_cmd->add_option("input", graph_input, "Input file")->required();
    graph_fam.attach(graph_cmd);
    graph_cmd->add_option("--highlight", graph_highlight)
        ->check(CLI::IsMember({"greedy", "optimal"}));

    // compress / decompress
    auto* comp_cmd = app.add_subcommand("compress", "Encode a file as an LZPL stream");
    std::string comp_input, comp_output, comp_strategy = "greedy";
    unsigned comp_w = 12, comp_l = 4;
    comp_cmd->add_option("input", comp_input)->required();
    comp_cmd->add_option("output", comp_output)->required();
    comp_cmd->add_option("--offset-bits", comp_w)->capture_default_str();
    comp_cmd->add_option("--length-bits", comp_l)->capture_default_str();
    comp_cmd->add_option("--strategy", comp_strategy)
        ->check(CLI::IsMember({"greedy", "optimal", "flexible"}))
        ->capture_default_str();

    auto* decomp_cmd = app.add_subcommand("decompress", "Decode an LZPL stream");
    std::string decomp_input, decomp_output;
    decomp_cmd->add_option("input", decomp_input)->required();
    decomp_cmd->add_option("output", decomp_output)->required();

    // search
    auto* search_cmd = app.add_subcommand("search", "Search for greedy-vs-optimal gaps");
    std::size_t search_alphabet = 2, search_max_len = 16, search_budget = 100000;
    std::uint64_t search_seed = 1;
    FamilyOptions search_fam;
    search_fam.attach(search_cmd);
    search_cmd->add_option("--alphabet", search_alphabet)->capture_default_str();
    search_cmd->add_option("--max-len", search_max_len)->check(CLI::Range(1, 24))
        ->capture_default_str();
    search_cmd->add_option("--budget", search_budget)->capture_default_str();
    search_cmd->add_option("--seed", search_seed)->capture_default_str();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Token counts over a corpus directory");
    std::string bench_dir, bench_windows = "16,256,4096,unbounded";
    std::string bench_strategies = "greedy,optimal";
    FamilyOptions bench_fam;
    bench_cmd->add_option("corpus", bench_dir, "Corpus directory")->required();
    bench_fam.attach(bench_cmd);
    bench_cmd->add_option("--windows", bench_windows)->capture_default_str();
    bench_cmd->add_option("--strategies", bench_strategies)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (parse_cmd->parsed())
            return cmd_parse(parse_input, parse_fam, parse_strategy, parse_format, parse_tokens,
                             limits);
        if (verify_cmd->parsed())
            return cmd_verify(verify_input, verify_random, verify_len, verify_alphabet,
                              verify_seed, verify_generator, verify_fam, limits);
        if (graph_cmd->parsed()) return cmd_graph(graph_input, graph_fam, graph_highlight, limits);
        if (comp_cmd->parsed())
            return cmd_compress(comp_input, comp_output, comp_w, comp_l, comp_strategy, limits);
        if (decomp_cmd->parsed()) return cmd_decompress(decomp_input, decomp_output);
        if (search_cmd->parsed())
            return cmd_search(search_fam, search_alphabet, search_max_len, search_budget,
                              search_seed);
        if (bench_cmd->parsed())
            return cmd_bench(bench_dir, bench_fam, bench_windows, bench_strategies, limits);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FamilyMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}
