// Command-line driver: streams bytes through the palindrome engines exactly
// once, verifies against the offline oracle, generates test inputs, and
// sweeps space/accuracy grids.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "palstream/additive.hpp"
#include "palstream/exact_window.hpp"
#include "palstream/generators.hpp"
#include "palstream/multiplicative.hpp"
#include "palstream/oracle.hpp"

namespace {

using json = nlohmann::ordered_json;
using palstream::Answer;
using palstream::Symbol;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Feeds every byte of the source to sink, strictly one pass, no seeks.
template <class Sink>
std::uint64_t stream_bytes(const std::string& path, Sink&& sink) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path, std::ios::binary);
        if (!file) throw IoError("cannot open input: " + path);
        in = &file;
    }
    std::uint64_t n = 0;
    std::vector<char> buf(std::size_t{1} << 16);
    while (*in) {
        in->read(buf.data(), static_cast<std::streamsize>(buf.size()));
        const std::streamsize got = in->gcount();
        for (std::streamsize t = 0; t < got; ++t) {
            sink(static_cast<std::uint8_t>(buf[static_cast<std::size_t>(t)]));
            ++n;
        }
    }
    if (in->bad()) throw IoError("read failure on input: " + path);
    return n;
}

struct CommonOpts {
    std::string mode;
    std::uint64_t error = 0;
    double epsilon = 0.0;
    std::uint64_t window = 0;
    std::uint64_t seed = 1;
    bool complement = false;
    std::string input = "-";
};

struct RunTotals {
    std::uint64_t n = 0;
    Answer ans;
    bool exact = false;
    std::uint64_t peak_space = 0;
    std::uint64_t max_ops = 0;
};

void check_dna_byte(std::uint8_t b) {
    switch (b) {
        case 'A': case 'C': case 'G': case 'T':
        case 'a': case 'c': case 'g': case 't':
            return;
        default:
            throw IoError("input byte outside the ACGT alphabet in complement mode");
    }
}

palstream::HashConfig config_for(const CommonOpts& opt) {
    std::optional<palstream::ComplementMap> cm;
    if (opt.complement) cm = palstream::ComplementMap::dna();
    return palstream::make_config(opt.seed, std::move(cm));
}

void validate(const CommonOpts& opt) {
    if (opt.mode == "additive") {
        if (opt.error < 2) throw std::invalid_argument("additive mode needs --error >= 2");
    } else if (opt.mode == "multiplicative") {
        if (!(opt.epsilon > 0.0)) throw std::invalid_argument("multiplicative mode needs --epsilon > 0");
    } else if (opt.mode == "exact") {
        if (opt.window < 1) throw std::invalid_argument("exact mode needs --window >= 1");
        if (opt.complement) throw std::invalid_argument("--complement applies to the fingerprint modes only");
    } else if (opt.mode == "combined") {
        if (!(opt.epsilon > 0.0)) throw std::invalid_argument("combined mode needs --epsilon > 0");
        if (opt.window < 1) throw std::invalid_argument("combined mode needs --window >= 1");
        if (opt.complement) throw std::invalid_argument("--complement applies to the fingerprint modes only");
    } else {
        throw std::invalid_argument("unknown mode: " + opt.mode);
    }
}

json config_echo(const CommonOpts& opt, std::uint64_t prime) {
    json cfg;
    if (opt.mode == "additive") cfg["error"] = opt.error;
    if (opt.mode == "multiplicative" || opt.mode == "combined") cfg["epsilon"] = opt.epsilon;
    if (opt.mode == "exact" || opt.mode == "combined") cfg["window"] = opt.window;
    cfg["seed"] = opt.seed;
    cfg["prime"] = prime;
    cfg["complement"] = opt.complement;
    return cfg;
}

// Streams the input through the engine(s) selected by opt; each symbol costs
// O(1) in every mode, combined included (two O(1) engines run back to back).
template <class ByteFn>
RunTotals run_engines(const CommonOpts& opt, ByteFn&& feed) {
    RunTotals totals;
    if (opt.mode == "additive") {
        palstream::AdditiveEngine eng(config_for(opt), opt.error);
        totals.n = feed([&](std::uint8_t b) {
            if (opt.complement) check_dna_byte(b);
            eng.push(b);
            totals.peak_space = std::max(totals.peak_space, eng.space_words());
        });
        totals.ans = eng.answer();
        totals.max_ops = eng.counters().max_ops;
    } else if (opt.mode == "multiplicative") {
        palstream::MultiplicativeEngine eng(config_for(opt), opt.epsilon);
        totals.n = feed([&](std::uint8_t b) {
            if (opt.complement) check_dna_byte(b);
            eng.push(b);
            totals.peak_space = std::max(totals.peak_space, eng.space_words());
        });
        totals.ans = eng.answer();
        totals.max_ops = eng.counters().max_ops;
    } else if (opt.mode == "exact") {
        palstream::WindowedManacher eng(opt.window);
        totals.n = feed([&](std::uint8_t b) {
            eng.push(b);
            totals.peak_space = std::max(totals.peak_space, eng.space_words());
        });
        const auto res = eng.finish();
        totals.ans = {res.pos, res.len};
        totals.exact = res.kind == palstream::ExactKind::Exact;
        totals.max_ops = eng.max_inner_iterations();
    } else {  // combined
        palstream::MultiplicativeEngine mult(config_for(opt), opt.epsilon);
        palstream::WindowedManacher exact(opt.window);
        totals.n = feed([&](std::uint8_t b) {
            mult.push(b);
            exact.push(b);
            totals.peak_space =
                std::max(totals.peak_space, mult.space_words() + exact.space_words());
        });
        const auto res = exact.finish();
        if (res.kind == palstream::ExactKind::Exact) {
            totals.ans = {res.pos, res.len};
            totals.exact = true;
        } else {
            totals.ans = mult.answer();
        }
        totals.max_ops = mult.counters().max_ops + exact.max_inner_iterations();
    }
    return totals;
}

json report_json(const CommonOpts& opt, const RunTotals& totals) {
    json rep;
    rep["mode"] = opt.mode;
    rep["n"] = totals.n;
    rep["length"] = totals.ans.len;
    rep["start"] = totals.ans.pos;
    rep["exact"] = totals.exact;
    rep["space_words"] = totals.peak_space;
    rep["max_ops_per_push"] = totals.max_ops;
    rep["config"] = config_echo(opt, palstream::kMersenne61);
    return rep;
}

int cmd_run(const CommonOpts& opt) {
    validate(opt);
    RunTotals totals = run_engines(opt, [&](auto&& sink) {
        return stream_bytes(opt.input, sink);
    });
    std::cout << report_json(opt, totals).dump() << "\n";
    return 0;
}

int cmd_verify(const CommonOpts& opt) {
    validate(opt);
    std::vector<Symbol> symbols;
    stream_bytes(opt.input, [&](std::uint8_t b) { symbols.push_back(b); });

    RunTotals totals = run_engines(opt, [&](auto&& sink) {
        for (Symbol s : symbols) sink(static_cast<std::uint8_t>(s));
        return static_cast<std::uint64_t>(symbols.size());
    });

    const palstream::ComplementMap* cm = nullptr;
    palstream::ComplementMap dna;
    if (opt.complement) {
        dna = palstream::ComplementMap::dna();
        cm = &dna;
    }
    const Answer oracle = palstream::oracle_lps(symbols, cm);
    const std::uint64_t len = totals.ans.len;
    const std::uint64_t big_l = oracle.len;

    bool bound_ok = false;
    if (opt.mode == "additive") {
        bound_ok = len <= big_l && big_l <= len + opt.error;
    } else if (opt.mode == "multiplicative") {
        bound_ok = len <= big_l &&
                   static_cast<long double>(len) * (1.0L + static_cast<long double>(opt.epsilon)) >=
                       static_cast<long double>(big_l);
    } else if (opt.mode == "exact") {
        bound_ok = totals.exact ? len == big_l
                                : (big_l >= opt.window &&
                                   (len == opt.window || len == opt.window + 1));
    } else {  // combined: exact answer or the multiplicative guarantee
        bound_ok = totals.exact
                       ? len == big_l
                       : (len <= big_l &&
                          static_cast<long double>(len) *
                                  (1.0L + static_cast<long double>(opt.epsilon)) >=
                              static_cast<long double>(big_l));
    }
    bool witness_ok = true;
    if (len > 0) {
        witness_ok = totals.ans.pos >= 1 && totals.ans.pos + len - 1 <= symbols.size() &&
                     palstream::is_palindrome_naive(
                         std::span<const Symbol>(symbols).subspan(totals.ans.pos - 1, len), cm);
    }

    json rep = report_json(opt, totals);
    rep["exact"] = len == big_l;
    rep["oracle_len"] = big_l;
    rep["bound_satisfied"] = bound_ok;
    rep["witness_ok"] = witness_ok;
    std::cout << rep.dump() << "\n";
    return 0;
}

struct GenOpts {
    std::string kind;
    std::uint64_t length = 0;
    std::uint32_t sigma = 2;
    std::uint64_t seed = 1;
    std::uint64_t planted_len = 0;
    std::string out;
};

int cmd_gen(const GenOpts& opt) {
    std::vector<Symbol> symbols;
    std::vector<char> bytes;
    if (opt.kind == "nu") {
        symbols = palstream::gen_nu(opt.length, Symbol{'0'});  // ASCII 0/1
    } else if (opt.kind == "random") {
        symbols = palstream::gen_random(opt.length, opt.sigma, opt.seed);
    } else if (opt.kind == "planted") {
        symbols = palstream::gen_planted(opt.length, opt.sigma, opt.seed, opt.planted_len);
    } else {
        throw std::invalid_argument("unknown generator kind: " + opt.kind);
    }
    if (opt.sigma > 256) throw std::invalid_argument("byte output needs sigma <= 256");
    bytes.reserve(symbols.size());
    // small alphabets map to letters for readability, larger ones to raw bytes
    const bool lettered = opt.kind != "nu" && opt.sigma <= 26;
    for (Symbol s : symbols)
        bytes.push_back(static_cast<char>(lettered ? 'a' + s : s));
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw IoError("cannot open output: " + opt.out);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failure on output: " + opt.out);
    return 0;
}

struct BenchCell {
    std::string mode;
    std::vector<std::uint64_t> ns;
    std::vector<double> params;  // E, eps or m depending on mode
    std::uint32_t sigma = 4;
    std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

// Grid cells look like "additive:n=1000000:E=2,8,32,128[:sigma=4][:seed=1]";
// multiple cells are separated by ';'. The parameter key is E, eps or m.
std::vector<BenchCell> parse_grid(const std::string& spec) {
    std::vector<BenchCell> cells;
    for (const std::string& cell_text : split(spec, ';')) {
        const auto fields = split(cell_text, ':');
        if (fields.empty()) continue;
        BenchCell cell;
        cell.mode = fields[0];
        for (std::size_t f = 1; f < fields.size(); ++f) {
            const auto eq = fields[f].find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad grid field: " + fields[f]);
            const std::string key = fields[f].substr(0, eq);
            const auto values = split(fields[f].substr(eq + 1), ',');
            if (key == "n")
                for (const auto& v : values) cell.ns.push_back(std::stoull(v));
            else if (key == "E" || key == "eps" || key == "m")
                for (const auto& v : values) cell.params.push_back(std::stod(v));
            else if (key == "sigma")
                cell.sigma = static_cast<std::uint32_t>(std::stoul(values.at(0)));
            else if (key == "seed")
                cell.seed = std::stoull(values.at(0));
            else
                throw std::invalid_argument("unknown grid key: " + key);
        }
        if (cell.ns.empty() || cell.params.empty())
            throw std::invalid_argument("grid cell needs n= and a parameter list");
        cells.push_back(std::move(cell));
    }
    if (cells.empty()) throw std::invalid_argument("empty bench grid");
    return cells;
}

int cmd_bench(const std::string& grid, const std::string& out_path) {
    const auto cells = parse_grid(grid);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (out_path != "-") {
        file.open(out_path);
        if (!file) throw IoError("cannot open output: " + out_path);
        out = &file;
    }
    *out << "mode,n,param,space_words,ns_per_symbol,achieved_error\n";
    for (const auto& cell : cells) {
        for (std::uint64_t n : cell.ns) {
            const auto input = palstream::gen_random(n, cell.sigma, cell.seed);
            const std::uint64_t big_l = palstream::oracle_lps(input).len;
            for (double param : cell.params) {
                CommonOpts opt;
                opt.mode = cell.mode;
                opt.seed = cell.seed;
                if (cell.mode == "additive") opt.error = static_cast<std::uint64_t>(param);
                else if (cell.mode == "multiplicative") opt.epsilon = param;
                else if (cell.mode == "exact") opt.window = static_cast<std::uint64_t>(param);
                else throw std::invalid_argument("bench supports additive, multiplicative, exact");
                validate(opt);
                const auto start = std::chrono::steady_clock::now();
                RunTotals totals = run_engines(opt, [&](auto&& sink) {
                    for (Symbol s : input) sink(static_cast<std::uint8_t>(s));
                    return n;
                });
                const auto stop = std::chrono::steady_clock::now();
                const double ns_per =
                    n == 0 ? 0.0
                           : std::chrono::duration<double, std::nano>(stop - start).count() /
                                 static_cast<double>(n);
                double achieved = 0.0;
                if (cell.mode == "multiplicative")
                    achieved = totals.ans.len == 0
                                   ? 0.0
                                   : static_cast<double>(big_l) /
                                             static_cast<double>(totals.ans.len) -
                                         1.0;
                else
                    achieved = static_cast<double>(big_l - totals.ans.len);
                *out << cell.mode << ',' << n << ',' << param << ',' << totals.peak_space
                     << ',' << ns_per << ',' << achieved << "\n";
            }
        }
    }
    if (!*out) throw IoError("write failure on bench output");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"streaming longest-palindrome engines"};
    app.require_subcommand(1);

    CommonOpts run_opt;
    auto add_common = [](CLI::App* sub, CommonOpts& opt) {
        sub->add_option("--mode", opt.mode, "additive | multiplicative | exact | combined")
            ->required();
        sub->add_option("--error", opt.error, "additive error budget E (>= 2)");
        sub->add_option("--epsilon", opt.epsilon, "multiplicative error epsilon (> 0)");
        sub->add_option("--window", opt.window, "exactness window m (>= 1)");
        sub->add_option("--seed", opt.seed, "hash base seed");
        sub->add_flag("--complement", opt.complement, "reverse-complement (DNA) palindromes");
        sub->add_option("--input", opt.input, "input path, - for stdin");
    };
    CLI::App* run_cmd = app.add_subcommand("run", "stream a source through one engine");
    add_common(run_cmd, run_opt);

    CommonOpts verify_opt;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run an engine and compare with the offline oracle");
    add_common(verify_cmd, verify_opt);

    GenOpts gen_opt;
    CLI::App* gen_cmd = app.add_subcommand("gen", "write a generated test input");
    gen_cmd->add_option("kind", gen_opt.kind, "nu | random | planted")->required();
    gen_cmd->add_option("--length", gen_opt.length, "output length")->required();
    gen_cmd->add_option("--sigma", gen_opt.sigma, "alphabet size");
    gen_cmd->add_option("--seed", gen_opt.seed, "generator seed");
    gen_cmd->add_option("--planted-len", gen_opt.planted_len, "planted palindrome length");
    gen_cmd->add_option("--out", gen_opt.out, "output path")->required();

    std::string grid, bench_out = "-";
    CLI::App* bench_cmd = app.add_subcommand("bench", "sweep space/accuracy grids, emit CSV");
    bench_cmd->add_option("--grid", grid, "e.g. additive:n=1000000:E=2,8,32,128")->required();
    bench_cmd->add_option("--out", bench_out, "CSV path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_opt);
        if (verify_cmd->parsed()) return cmd_verify(verify_opt);
        if (gen_cmd->parsed()) return cmd_gen(gen_opt);
        if (bench_cmd->parsed()) return cmd_bench(grid, bench_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
