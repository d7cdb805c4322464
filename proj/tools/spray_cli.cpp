// Command-line front end: evaluate polyform expressions, count knight closed
// walks, run trapped lattice walks, and benchmark the two storage backends.
//
// Exit codes: 0 success, 1 backend mismatch in bench, 2 usage error,
// 3 domain/arity error, 4 parse error, 5 capacity/overflow.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spray.hpp"
#include "spray/bench.hpp"

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kDomain = 3, kParse = 4, kCapacity = 5 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

spray::Backend resolve_backend(const std::string& flag) {
    if (!flag.empty()) return spray::parse_backend(flag);
    if (const char* env = std::getenv("SPRAY_BACKEND"); env && *env) {
        try {
            return spray::parse_backend(env);
        } catch (const spray::DomainError& e) {
            throw UsageError(std::string("SPRAY_BACKEND: ") + e.what());
        }
    }
    return spray::default_backend;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

spray::MultiIndex parse_point(const std::string& text, const char* what) {
    std::vector<spray::Exponent> coords;
    for (const auto& field : split(text, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != field.size())
            throw UsageError(std::string("malformed ") + what + " '" + text + "'");
        coords.push_back(static_cast<spray::Exponent>(v));
    }
    return spray::MultiIndex(std::move(coords));
}

// "a,b;c,d" -> {(a,b), (c,d)}; the empty string means no traps.
std::vector<spray::MultiIndex> parse_traps(const std::string& text) {
    std::vector<spray::MultiIndex> out;
    for (const auto& pair : split(text, ';'))
        if (!pair.empty()) out.push_back(parse_point(pair, "trap"));
    return out;
}

std::string shortest(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse multivariate Laurent polynomial toolkit"};
    app.require_subcommand(1);

    std::string expr;
    std::size_t eval_arity = 0;
    std::vector<double> at;
    auto* eval = app.add_subcommand("eval", "Evaluate a polyform expression at a point");
    eval->add_option("--expr", expr, "Polyform expression, e.g. \"x*y^3 + 2*x^2*y^2\"")->required();
    eval->add_option("--arity", eval_arity, "Number of variables")->required()->check(CLI::PositiveNumber);
    eval->add_option("--at", at, "Comma-separated coordinates")->required()->delimiter(',');

    std::size_t dim = 2;
    long moves = 6;
    bool pause = false;
    std::string backend_flag;
    auto* knight_cmd = app.add_subcommand("knight", "Count closed walks of a d-dimensional knight");
    knight_cmd->add_option("--dim", dim, "Board dimension (>= 2)")->required();
    knight_cmd->add_option("--moves", moves, "Number of moves")->required();
    knight_cmd->add_flag("--pause", pause, "Allow the knight to stay put on a move");
    knight_cmd->add_option("--backend", backend_flag, "ordered or hashed");

    std::size_t walk_dim = 2;
    long side = 17;
    long steps = 100;
    std::string initial = "10,10";
    std::string traps = "2,3;3,5";
    auto* walk = app.add_subcommand("walk", "Survival probability of a trapped walk on a periodic lattice");
    walk->add_option("--dim", walk_dim, "Lattice dimension")->capture_default_str();
    walk->add_option("--side", side, "Lattice side length")->capture_default_str();
    walk->add_option("--steps", steps, "Number of timesteps")->capture_default_str();
    walk->add_option("--initial", initial, "Starting node, comma-separated")->capture_default_str();
    walk->add_option("--traps", traps, "Trap nodes, e.g. \"2,3;3,5\"; empty for none")->capture_default_str();
    walk->add_option("--backend", backend_flag, "ordered or hashed");

    std::string op = "power";
    std::size_t bench_dim = 4;
    long bench_moves = 6;
    std::string bench_backend = "both";
    int repeat = 3;
    auto* bench = app.add_subcommand("bench", "Time knight powers under each backend (CSV)");
    bench->add_option("--op", op, "mul or power")->capture_default_str()->check(CLI::IsMember({"mul", "power"}));
    bench->add_option("--dim", bench_dim, "Knight dimension")->capture_default_str();
    bench->add_option("--moves", bench_moves, "Exponent")->capture_default_str();
    bench->add_option("--backend", bench_backend, "ordered, hashed or both")->capture_default_str()
        ->check(CLI::IsMember({"ordered", "hashed", "both"}));
    bench->add_option("--repeat", repeat, "Timed repetitions per backend")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eval) {
            const spray::Spray p = spray::parse(expr, eval_arity);
            std::cout << shortest(spray::evaluate(p, at)) << '\n';
        } else if (*knight_cmd) {
            const auto backend = resolve_backend(backend_flag);
            const auto start = std::chrono::steady_clock::now();
            const double count = spray::knight_closed_walks(dim, moves, pause, backend);
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            std::printf("%.0f\n", count);
            std::fprintf(stderr, "elapsed %.3f s (%s backend)\n", elapsed.count(),
                         std::string(spray::to_string(backend)).c_str());
        } else if (*walk) {
            spray::WalkConfig cfg;
            cfg.d = walk_dim;
            cfg.n = side;
            cfg.steps = steps;
            cfg.initial = parse_point(initial, "initial node");
            cfg.traps = parse_traps(traps);
            cfg.kernel = spray::walk_kernel(walk_dim, resolve_backend(backend_flag));
            const auto result = spray::run_walk(cfg);
            std::printf("%#.7g\n", result.survival);
        } else if (*bench) {
            spray::BenchOptions opts;
            opts.op = op == "mul" ? spray::BenchOp::Multiply : spray::BenchOp::Power;
            opts.dim = bench_dim;
            opts.moves = bench_moves;
            opts.repeat = repeat;
            if (bench_backend != "both") opts.backends = {spray::parse_backend(bench_backend)};
            std::cout << spray::to_csv(spray::run_bench(opts));
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const spray::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const spray::NameError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const spray::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << '\n';
        return kCapacity;
    } catch (const spray::OracleCapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const spray::BackendMismatchError& e) {
        std::cerr << "backend mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const spray::SingularityError& e) {
        std::cerr << "singularity: " << e.what() << '\n';
        return kDomain;
    } catch (const spray::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kOk;
}
