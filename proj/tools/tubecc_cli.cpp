// tubecc: command-line front end over the C API.
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tubecc/tubecc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct Config {
    int rank = 0;
    std::string format = "text";
    std::uint64_t seed = 1;
    int max_rank = 4;
    int max_length = 9;
    std::size_t samples = 100;
    std::size_t fuel = 10000;
};

int exit_code(tubecc_status s) {
    switch (s) {
        case TUBECC_OK: return kExitOk;
        case TUBECC_VERIFY_FAILED:
        case TUBECC_DECOMPOSITION_FAILED:
        case TUBECC_INTERNAL: return kExitVerify;
        default: return kExitUsage;
    }
}

struct ContextDeleter {
    void operator()(tubecc_context* c) const { tubecc_context_destroy(c); }
};
using Context = std::unique_ptr<tubecc_context, ContextDeleter>;

class Session {
public:
    explicit Session(const Config& cfg) : cfg_(cfg) {}

    tubecc_format format() const { return cfg_.format == "json" ? TUBECC_FORMAT_JSON : TUBECC_FORMAT_TEXT; }

    // Context for commands that need a rank; reports and returns null on failure.
    tubecc_context* context(bool need_rank = true) {
        if (ctx_) return ctx_.get();
        if (need_rank && cfg_.rank < 1) {
            std::cerr << "error: --rank R (R >= 1) is required\n";
            return nullptr;
        }
        tubecc_context* raw = nullptr;
        if (tubecc_context_create(need_rank ? cfg_.rank : 1, &raw) != TUBECC_OK) {
            std::cerr << "error: could not create context\n";
            return nullptr;
        }
        ctx_.reset(raw);
        tubecc_set_fuel(raw, cfg_.fuel);
        return raw;
    }

    // Prints and frees `*out` (when set) and maps the status to an exit code.
    // Takes the address so the string is read only after the call producing it.
    int finish(tubecc_status s, char** out) {
        if (out && *out) {
            std::cout << *out << '\n';
            tubecc_string_free(*out);
            *out = nullptr;
        }
        if (s != TUBECC_OK && s != TUBECC_VERIFY_FAILED) {
            std::cerr << "error: " << tubecc_status_string(s) << ": " << tubecc_last_error(ctx_.get()) << '\n';
        } else if (s == TUBECC_VERIFY_FAILED && ctx_ && *tubecc_last_error(ctx_.get())) {
            std::cerr << "error: " << tubecc_last_error(ctx_.get()) << '\n';
        }
        return exit_code(s);
    }

    const Config& config() const { return cfg_; }

private:
    const Config& cfg_;
    Context ctx_;
};

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized cluster characters for cyclic quivers", "tubecc"};
    app.fallthrough();
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--rank", cfg.rank, "Rank r of the cyclic quiver")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "Seed for randomized sweeps");
    app.add_option("--max-rank", cfg.max_rank, "Largest rank in sweeps")->check(CLI::PositiveNumber);
    app.add_option("--max-length", cfg.max_length, "Largest module length in sweeps")->check(CLI::PositiveNumber);
    app.add_option("--samples", cfg.samples, "Random instances per randomized check")->check(CLI::PositiveNumber);
    app.add_option("--fuel", cfg.fuel, "Rewrite steps for decompositions")->check(CLI::PositiveNumber);

    std::string a, b, suite = "all";
    std::vector<std::string> list;
    std::vector<int> ints;

    auto* c_char = app.add_subcommand("char", "Character X_M of a module");
    c_char->add_option("module", a)->required();
    auto* c_mult = app.add_subcommand("mult", "Expand X_A X_B");
    c_mult->add_option("a", a)->required();
    c_mult->add_option("b", b)->required();
    auto* c_dec = app.add_subcommand("decompose", "Expand X_M in the basis of rigid characters");
    c_dec->add_option("module", a)->required();
    auto* c_hom = app.add_subcommand("hom", "dim Hom(A, B)");
    c_hom->add_option("a", a)->required();
    c_hom->add_option("b", b)->required();
    auto* c_ext = app.add_subcommand("ext", "dim Ext^1(A, B)");
    c_ext->add_option("a", a)->required();
    c_ext->add_option("b", b)->required();
    auto* c_rigid = app.add_subcommand("rigid", "Whether Ext^1(M, M) = 0");
    c_rigid->add_option("module", a)->required();
    auto* c_ind = app.add_subcommand("independence", "Linear independence of characters");
    c_ind->add_option("modules", list)->required();
    auto* c_enum = app.add_subcommand("enumerate", "Rigid modules with dim <= bound");
    c_enum->add_option("bound", ints, "One entry per vertex")->required();
    auto* c_expand = app.add_subcommand("expand", "Expand a product of simple characters");
    c_expand->add_option("word", ints, "Vertex indices")->required();
    auto* c_verify = app.add_subcommand("verify", "Run verification sweeps");
    c_verify->add_option("--suite", suite, "Suite to run")
        ->check(CLI::IsMember({"characters", "ar", "cluster_mult", "inductive", "basis", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Session s(cfg);
    const tubecc_format fmt = s.format();
    char* out = nullptr;

    if (c_verify->parsed()) {
        tubecc_context* ctx = s.context(false);
        if (!ctx) return kExitUsage;
        tubecc_verify_config vc;
        tubecc_verify_config_default(&vc);
        vc.max_rank = cfg.max_rank;
        vc.max_length = cfg.max_length;
        vc.seed = cfg.seed;
        vc.samples = cfg.samples;
        return s.finish(tubecc_verify(ctx, suite.c_str(), &vc, fmt, &out), &out);
    }

    tubecc_context* ctx = s.context();
    if (!ctx) return kExitUsage;

    if (c_char->parsed()) {
        tubecc_poly* p = nullptr;
        tubecc_status st = tubecc_char(ctx, a.c_str(), &p);
        if (st == TUBECC_OK) st = tubecc_poly_to_string(p, fmt, &out);
        tubecc_poly_destroy(p);
        return s.finish(st, &out);
    }
    if (c_mult->parsed()) return s.finish(tubecc_mult(ctx, a.c_str(), b.c_str(), fmt, &out), &out);
    if (c_dec->parsed()) return s.finish(tubecc_decompose(ctx, a.c_str(), fmt, &out), &out);
    if (c_hom->parsed() || c_ext->parsed()) {
        std::size_t dim = 0;
        const tubecc_status st = c_hom->parsed() ? tubecc_hom_dim(ctx, a.c_str(), b.c_str(), &dim)
                                                 : tubecc_ext_dim(ctx, a.c_str(), b.c_str(), &dim);
        if (st == TUBECC_OK) {
            if (fmt == TUBECC_FORMAT_JSON) {
                std::cout << "{\"a\":" << json_string(a) << ",\"b\":" << json_string(b) << ",\"dim\":" << dim << "}\n";
            } else {
                std::cout << dim << '\n';
            }
        }
        return s.finish(st, nullptr);
    }
    if (c_rigid->parsed()) {
        int rigid = 0;
        const tubecc_status st = tubecc_is_rigid(ctx, a.c_str(), &rigid);
        if (st == TUBECC_OK) {
            if (fmt == TUBECC_FORMAT_JSON) {
                std::cout << "{\"module\":" << json_string(a) << ",\"rigid\":" << (rigid ? "true" : "false") << "}\n";
            } else {
                std::cout << (rigid ? "true" : "false") << '\n';
            }
        }
        return s.finish(st, nullptr);
    }
    if (c_ind->parsed()) {
        std::vector<const char*> ptrs;
        for (const std::string& m : list) ptrs.push_back(m.c_str());
        int independent = 0;
        return s.finish(tubecc_independence(ctx, ptrs.data(), ptrs.size(), fmt, &independent, &out), &out);
    }
    if (c_enum->parsed()) return s.finish(tubecc_enumerate_rigid(ctx, ints.data(), ints.size(), fmt, &out), &out);
    if (c_expand->parsed()) return s.finish(tubecc_expand_simple_product(ctx, ints.data(), ints.size(), fmt, &out), &out);
    return kExitUsage;
}
