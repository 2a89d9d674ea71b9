#include <cstddef>
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "codegb/code.hpp"
#include "codegb/cycles.hpp"
#include "codegb/errors.hpp"
#include "codegb/groebner.hpp"
#include "codegb/text_io.hpp"
#include "codegb/word.hpp"

namespace {

using codegb::BinaryCode;
using codegb::Binomial;
using codegb::BitVec;
using codegb::GbLimits;
using codegb::Graph;
using codegb::GroebnerBasis;
using codegb::Word;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Options {
    std::string input;
    std::string word_bits;
    bool use_check = false;
    bool as_graph = false;
    bool emit_json = false;
    bool force = false;
    bool early = false;
};

GbLimits limits(const Options& opt) { return GbLimits{16, opt.force}; }

BinaryCode load_code(const Options& opt) {
    const codegb::BinaryMatrix m = codegb::parse_matrix_file(opt.input);
    return opt.use_check ? BinaryCode::from_check(m) : BinaryCode::from_generator(m);
}

BitVec received_word(const Options& opt, const BinaryCode& code) {
    const BitVec y = codegb::parse_bit_string(opt.word_bits);
    if (y.size() != code.length())
        throw std::invalid_argument("received word '" + opt.word_bits + "' has length " +
                                    std::to_string(y.size()) + ", code length is " +
                                    std::to_string(code.length()));
    return y;
}

std::string binomial_str(const Binomial& b) { return b.head.str() + " - " + b.tail.str(); }

json start_json(const char* command) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    return out;
}

void print_json(const json& out) { std::cout << out.dump(2) << "\n"; }

std::string edge_list_str(const Graph& g, const BitVec& cycle) {
    std::string out;
    for (auto [u, v] : codegb::edges_in_cycle(g, cycle)) {
        out += out.empty() ? "edges " : " ";
        out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
    return out;
}

json edge_list_json(const Graph& g, const BitVec& cycle) {
    json edges = json::array();
    for (auto [u, v] : codegb::edges_in_cycle(g, cycle)) edges.push_back({u, v});
    return edges;
}

int run_gb(const Options& opt) {
    const BinaryCode code = load_code(opt);
    const GroebnerBasis gb = compute_groebner_basis(code, limits(opt));
    if (opt.emit_json) {
        json out = start_json("gb");
        out["n"] = code.length();
        out["k"] = code.dimension();
        out["staircase_size"] = gb.staircase_size();
        json squares = json::array();
        for (const Binomial& b : gb.squares()) squares.push_back(binomial_str(b));
        json elements = json::array();
        for (const Binomial& b : gb.emitted())
            if (!codegb::is_square(b)) elements.push_back(binomial_str(b));
        out["squares"] = std::move(squares);
        out["elements"] = std::move(elements);
        print_json(out);
    } else {
        std::cout << "n = " << code.length() << "\n";
        std::cout << "k = " << code.dimension() << "\n";
        std::cout << "|N| = " << gb.staircase_size() << "\n";
        std::cout << codegb::serialize(gb);
    }
    return 0;
}

int run_decode(const Options& opt) {
    const BinaryCode code = load_code(opt);
    const BitVec y = received_word(opt, code);
    const GroebnerBasis gb = compute_groebner_basis(code, limits(opt));
    const codegb::DecodeResult r = decode(gb, y);
    if (opt.emit_json) {
        json out = start_json("decode");
        out["n"] = code.length();
        out["k"] = code.dimension();
        out["received"] = y.str();
        out["error"] = r.error.str();
        out["codeword"] = r.codeword.str();
        out["within_capability"] = r.within_capability;
        print_json(out);
    } else {
        std::cout << "error = " << r.error.str() << "\n";
        std::cout << "codeword = " << r.codeword.str() << "\n";
        std::cout << "within_capability = " << (r.within_capability ? "true" : "false") << "\n";
    }
    return 0;
}

int run_capability(const Options& opt) {
    const BinaryCode code = load_code(opt);
    const std::size_t t =
        opt.early ? codegb::error_capability_early(code, limits(opt))
                  : codegb::error_capability(compute_groebner_basis(code, limits(opt)));
    if (opt.emit_json) {
        json out = start_json("capability");
        out["early"] = opt.early;
        out["t"] = t;
        print_json(out);
    } else {
        std::cout << "t = " << t << "\n";
    }
    return 0;
}

int run_minwords(const Options& opt) {
    const BinaryCode code = load_code(opt);
    const GroebnerBasis gb = compute_groebner_basis(code, limits(opt));
    const codegb::MinWeightCodewords mw = min_weight_codewords(gb);
    if (opt.emit_json) {
        json out = start_json("minwords");
        out["min_weight"] = mw.min_weight;
        json words = json::array();
        for (const BitVec& c : mw.codewords) words.push_back(c.str());
        out["codewords"] = std::move(words);
        print_json(out);
    } else {
        std::cout << "d = " << mw.min_weight << "\n";
        for (const BitVec& c : mw.codewords) std::cout << c.str() << "\n";
    }
    return 0;
}

int run_decompose(const Options& opt) {
    const BinaryCode code = load_code(opt);
    const BitVec c = received_word(opt, code);
    const GroebnerBasis gb = compute_groebner_basis(code, limits(opt));
    const std::vector<Binomial> parts = decompose(c, gb);
    BitVec sum(code.length());
    for (const Binomial& b : parts) sum ^= binomial_codeword(b);
    if (opt.emit_json) {
        json out = start_json("decompose");
        out["codeword"] = c.str();
        json steps = json::array();
        for (const Binomial& b : parts)
            steps.push_back({{"binomial", binomial_str(b)},
                             {"codeword", binomial_codeword(b).str()}});
        out["parts"] = std::move(steps);
        out["sum"] = sum.str();
        out["sum_matches"] = (sum == c);
        print_json(out);
    } else {
        std::cout << "codeword = " << c.str() << "\n";
        for (std::size_t i = 0; i < parts.size(); ++i)
            std::cout << "g" << (i + 1) << " = " << binomial_str(parts[i]) << "\n";
        std::cout << "sum = " << sum.str() << "\n";
        std::cout << "sum_matches = " << (sum == c ? "true" : "false") << "\n";
    }
    return 0;
}

int run_cyclebasis(const Options& opt) {
    const Graph g = codegb::parse_graph_file(opt.input);
    const codegb::CycleBasis basis = minimal_cycle_basis(g, limits(opt));
    if (opt.emit_json) {
        json out = start_json("cyclebasis");
        out["vertices"] = g.vertex_count();
        out["edges"] = g.edge_count();
        out["dimension"] = basis.cycles.size();
        json cycles = json::array();
        for (const BitVec& c : basis.cycles)
            cycles.push_back({{"vector", c.str()},
                              {"length", c.count()},
                              {"edges", edge_list_json(g, c)}});
        out["cycles"] = std::move(cycles);
        out["total_length"] = basis.total_length;
        print_json(out);
    } else {
        std::cout << "dimension = " << basis.cycles.size() << "\n";
        for (std::size_t i = 0; i < basis.cycles.size(); ++i)
            std::cout << "cycle " << (i + 1) << ": " << basis.cycles[i].str() << "  "
                      << edge_list_str(g, basis.cycles[i]) << "\n";
        std::cout << "total_length = " << basis.total_length << "\n";
    }
    return 0;
}

int run_mincycles(const Options& opt) {
    const Graph g = codegb::parse_graph_file(opt.input);
    const codegb::MinimalCycles mc = minimal_cycles(g, limits(opt));
    if (opt.emit_json) {
        json out = start_json("mincycles");
        out["min_length"] = mc.min_length;
        json cycles = json::array();
        for (const BitVec& c : mc.cycles)
            cycles.push_back({{"vector", c.str()}, {"edges", edge_list_json(g, c)}});
        out["cycles"] = std::move(cycles);
        print_json(out);
    } else {
        std::cout << "d = " << mc.min_length << "\n";
        for (const BitVec& c : mc.cycles)
            std::cout << c.str() << "  " << edge_list_str(g, c) << "\n";
    }
    return 0;
}

// ---- check subcommand ----

struct CheckReport {
    std::vector<std::pair<std::string, bool>> entries;

    void add(const std::string& name, bool pass) { entries.push_back({name, pass}); }

    bool all_pass() const {
        for (const auto& [name, pass] : entries)
            if (!pass) return false;
        return true;
    }
};

// Deterministic sample of vectors used when the exhaustive sweep would be
// too large.
std::vector<BitVec> sample_vectors(std::size_t n, std::size_t count) {
    std::vector<BitVec> out;
    std::uint64_t state = 0x12345678abcdef00ull + n;
    for (std::size_t i = 0; i < count; ++i) {
        BitVec v(n);
        for (std::size_t b = 0; b < n; ++b) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            if ((state >> 33) & 1u) v.set(b, true);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<BitVec> all_vectors(std::size_t n) {
    std::vector<BitVec> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        BitVec v(n);
        for (std::size_t b = 0; b < n; ++b)
            if ((mask >> b) & 1u) v.set(b, true);
        out.push_back(std::move(v));
    }
    return out;
}

void check_code(const BinaryCode& code, const GbLimits& lim, CheckReport& report) {
    const GroebnerBasis gb = compute_groebner_basis(code, lim);
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();

    report.add("reduced_basis", verify_reduced_basis(gb));
    report.add("staircase_size", gb.staircase_size() == (std::size_t{1} << (n - k)));

    bool ordered = true;
    for (std::size_t i = 1; i < gb.emitted().size(); ++i)
        if (degrevlex_order(gb.emitted()[i - 1].head, gb.emitted()[i].head) ==
            std::strong_ordering::greater)
            ordered = false;
    report.add("emission_order", ordered);

    bool head_bounds = true;
    for (const Binomial& b : gb.elements()) {
        const std::size_t d = binomial_codeword(b).count();
        const std::size_t t = (d - 1) / 2 + 1;
        const unsigned deg = b.head.total_degree();
        if (deg != t && deg != t + 1) head_bounds = false;
    }
    report.add("head_degree_bounds", head_bounds);

    const codegb::CosetLeaderMap leaders = oracle_coset_leaders(code);
    bool leader_map = leaders.size() == gb.staircase_size();
    for (const auto& [syndrome, leader] : leaders) {
        const Word* canon = gb.canonical_for_syndrome(syndrome);
        if (canon == nullptr || !(*canon == leader)) leader_map = false;
    }
    report.add("coset_leader_oracle", leader_map);

    const std::vector<BitVec> sweep = n <= 14 ? all_vectors(n) : sample_vectors(n, 4096);
    bool reduction = true;
    for (const BitVec& v : sweep) {
        const Word canon = canonical_form(Word::from_bits(v), gb);
        auto it = leaders.find(code.syndrome(v));
        if (it == leaders.end() || !(canon == it->second)) reduction = false;
    }
    report.add("reduction_oracle", reduction);

    if (k >= 1) {
        const std::size_t t = codegb::error_capability(gb);
        const std::size_t d = codegb::oracle_min_distance(code);
        bool capability = t == (d - 1) / 2;
        if (codegb::error_capability_early(code, lim) != t) capability = false;
        report.add("capability", capability);

        bool decoding = true;
        for (const BitVec& y : sweep) {
            const codegb::DecodeResult r = decode(gb, y);
            const codegb::OracleDecodeResult o = oracle_decode(code, y);
            if (r.codeword != o.codeword || r.error.count() != o.distance ||
                r.within_capability != (o.distance <= t))
                decoding = false;
        }
        report.add("decode_oracle", decoding);

        const codegb::MinWeightCodewords mw = min_weight_codewords(gb);
        std::set<BitVec> exhaustive;
        for (const BitVec& c : code.codewords())
            if (c.count() == d) exhaustive.insert(c);
        report.add("min_weight_oracle",
                   mw.min_weight == d &&
                       std::set<BitVec>(mw.codewords.begin(), mw.codewords.end()) ==
                           exhaustive);

        bool decomposition = true;
        for (const BitVec& c : code.codewords()) {
            if (c.is_zero()) continue;
            const std::size_t bound = (c.count() - 1) / 2 + 1;
            BitVec sum(n);
            for (const Binomial& b : decompose(c, gb)) {
                sum ^= binomial_codeword(b);
                if (binomial_codeword(b).count() > c.count()) decomposition = false;
                if (b.head.total_degree() > bound) decomposition = false;
            }
            if (sum != c) decomposition = false;
        }
        report.add("decomposition", decomposition);
    }
}

void check_graph(const Graph& g, const GbLimits& lim, CheckReport& report) {
    const BinaryCode code = cycle_space_code(g);
    const codegb::BinaryMatrix incidence = incidence_check_matrix(g);
    const std::size_t betti =
        g.edge_count() + codegb::component_count(g) - g.vertex_count();
    report.add("betti_dimension", code.dimension() == betti);

    const codegb::BinaryMatrix fundamental = fundamental_cycle_basis(g);
    report.add("fundamental_cycles", rref(fundamental).matrix == code.generator());

    if (code.dimension() >= 1) {
        const codegb::CycleBasis basis = minimal_cycle_basis(g, lim);
        bool orthogonal = true;
        for (const BitVec& c : basis.cycles)
            if (codegb::row_times_matrix(c, incidence).any()) orthogonal = false;
        report.add("incidence_orthogonality", orthogonal);
        report.add("basis_dimension", basis.cycles.size() == code.dimension());
        report.add("minimal_basis_oracle",
                   basis.total_length == codegb::oracle_minimal_basis_length(code));
        check_code(code, lim, report);
    }
}

int run_check(const Options& opt) {
    CheckReport report;
    if (opt.as_graph) {
        const Graph g = codegb::parse_graph_file(opt.input);
        check_graph(g, limits(opt), report);
    } else {
        check_code(load_code(opt), limits(opt), report);
    }
    if (opt.emit_json) {
        json out = start_json("check");
        json checks = json::array();
        for (const auto& [name, pass] : report.entries)
            checks.push_back({{"name", name}, {"pass", pass}});
        out["checks"] = std::move(checks);
        out["pass"] = report.all_pass();
        print_json(out);
    } else {
        for (const auto& [name, pass] : report.entries)
            std::cout << name << ": " << (pass ? "pass" : "fail") << "\n";
        std::cout << "result: " << (report.all_pass() ? "pass" : "fail") << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

void add_matrix_options(CLI::App* cmd, Options& opt, bool with_word) {
    cmd->add_option("input", opt.input, "matrix file (rows of 0/1, '#' comments)")
        ->required();
    cmd->add_flag("--check", opt.use_check,
                  "interpret the input as a check matrix instead of a generator matrix");
    if (with_word)
        cmd->add_option("--word", opt.word_bits, "binary word, e.g. 111110")->required();
    cmd->add_flag("--json", opt.emit_json, "emit machine-readable JSON");
    cmd->add_flag("--force", opt.force, "override the staircase resource guard");
}

void add_graph_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input, "graph file ('V <count>' then 'u v' edges)")
        ->required();
    cmd->add_flag("--json", opt.emit_json, "emit machine-readable JSON");
    cmd->add_flag("--force", opt.force, "override the staircase resource guard");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner-basis toolkit for binary linear codes and graph cycle spaces"};
    app.require_subcommand(1);
    Options opt;
    int status = 0;

    CLI::App* gb = app.add_subcommand("gb", "print the reduced Groebner basis and |N|");
    add_matrix_options(gb, opt, false);
    gb->callback([&] { status = run_gb(opt); });

    CLI::App* dec = app.add_subcommand("decode", "decode a received word");
    add_matrix_options(dec, opt, true);
    dec->callback([&] { status = run_decode(opt); });

    CLI::App* cap = app.add_subcommand("capability", "print the error-correcting capability t");
    add_matrix_options(cap, opt, false);
    cap->add_flag("--early", opt.early, "stop the enumeration at the first standard head");
    cap->callback([&] { status = run_capability(opt); });

    CLI::App* mw = app.add_subcommand("minwords", "print all minimum-weight codewords");
    add_matrix_options(mw, opt, false);
    mw->callback([&] { status = run_minwords(opt); });

    CLI::App* dc = app.add_subcommand("decompose", "decompose a codeword into basis binomials");
    add_matrix_options(dc, opt, true);
    dc->callback([&] { status = run_decompose(opt); });

    CLI::App* cb = app.add_subcommand("cyclebasis", "print a minimal cycle basis of a graph");
    add_graph_options(cb, opt);
    cb->callback([&] { status = run_cyclebasis(opt); });

    CLI::App* mc = app.add_subcommand("mincycles", "print all shortest cycles of a graph");
    add_graph_options(mc, opt);
    mc->callback([&] { status = run_mincycles(opt); });

    CLI::App* ck = app.add_subcommand("check", "run structural and oracle self-checks");
    add_matrix_options(ck, opt, false);
    ck->add_flag("--graph", opt.as_graph, "interpret the input as a graph file");
    ck->callback([&] { status = run_check(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const codegb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const codegb::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return status;
}
