#include "tubecc/tubecc.h"

#include <cstring>
#include <new>
#include <sstream>

#include <json.hpp>

#include "tubecc/basis.hpp"
#include "tubecc/character.hpp"
#include "tubecc/error.hpp"
#include "tubecc/expr.hpp"
#include "tubecc/multiplication.hpp"
#include "tubecc/tube.hpp"
#include "tubecc/verify.hpp"

struct tubecc_context {
    int rank = 1;
    std::size_t fuel = 10000;
    std::string last_error;
};

struct tubecc_poly {
    tubecc::LaurentPoly value;
};

namespace {

using json = nlohmann::ordered_json;
using namespace tubecc;

tubecc_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::validation: return TUBECC_INVALID_ARGUMENT;
        case ErrorKind::parse: return TUBECC_PARSE_ERROR;
        case ErrorKind::precondition: return TUBECC_PRECONDITION;
        case ErrorKind::verification: return TUBECC_VERIFY_FAILED;
        case ErrorKind::decomposition: return TUBECC_DECOMPOSITION_FAILED;
    }
    return TUBECC_INTERNAL;
}

template <class F>
tubecc_status guarded(tubecc_context* ctx, F&& body) {
    if (!ctx) return TUBECC_INVALID_ARGUMENT;
    ctx->last_error.clear();
    try {
        return body();
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
    }
    return TUBECC_INTERNAL;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what) {
    if (!p) fail(ErrorKind::validation, std::string(what) + " must not be null");
}

TubeModule parse(const tubecc_context* ctx, const char* text) {
    need(text, "module expression");
    return parse_module(text, ctx->rank);
}

json coeff_json(const Integer& c) {
    if (c.fits_slong_p()) return json(c.get_si());
    return json(c.get_str());
}

json terms_json(const std::vector<ExpansionTerm>& terms) {
    json arr = json::array();
    for (const ExpansionTerm& t : terms) arr.push_back({{"coeff", coeff_json(t.coeff)}, {"module", t.module.to_string()}});
    return arr;
}

std::string combination_text(const ModuleCombination& c) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [m, k] : c) {
        if (!first) os << ", ";
        first = false;
        os << m.to_string() << ": " << k.get_str();
    }
    os << '}';
    return os.str();
}

json combination_json(int rank, const ModuleCombination& c) {
    json arr = json::array();
    for (const auto& [m, k] : c) arr.push_back({{"coeff", coeff_json(k)}, {"module", m.to_string()}});
    return {{"rank", rank}, {"terms", arr}};
}

DimVector bound_of(const tubecc_context* ctx, const int* bound, std::size_t len) {
    need(bound, "bound");
    if (len != static_cast<std::size_t>(ctx->rank)) fail(ErrorKind::validation, "bound must have one entry per vertex");
    return DimVector(ctx->rank, std::vector<int>(bound, bound + len));
}

struct MultResult {
    std::string method;
    ProductExpansion expansion;
};

MultResult multiply(const TubeModule& a, const TubeModule& b) {
    if (a.is_indecomposable() && b.is_indecomposable()) {
        if (ext1_dim(a, b) == 1 && hom_dim(b, tau(a)) == 1) return {"cluster", cluster_mult(a, b)};
        if (ext1_dim(b, a) == 1 && hom_dim(a, tau(b)) == 1) return {"cluster", cluster_mult(b, a)};
        const InductiveExpansion e = multiply_indecomposables(a.rank(), a.summands()[0], b.summands()[0]);
        return {std::string("inductive ") + to_string(e.which), e.expansion};
    }
    ProductExpansion p{a, b, {{1, a.direct_sum(b)}}, false};
    return {"direct_sum", verify_expansion(std::move(p))};
}

}  // namespace

extern "C" {

const char* tubecc_status_string(tubecc_status status) {
    switch (status) {
        case TUBECC_OK: return "ok";
        case TUBECC_VERIFY_FAILED: return "verification failed";
        case TUBECC_INVALID_ARGUMENT: return "invalid argument";
        case TUBECC_PARSE_ERROR: return "parse error";
        case TUBECC_PRECONDITION: return "precondition not met";
        case TUBECC_DECOMPOSITION_FAILED: return "decomposition failed";
        case TUBECC_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tubecc_version(void) { return "1.0.0"; }

tubecc_status tubecc_context_create(int rank, tubecc_context** out) {
    if (!out) return TUBECC_INVALID_ARGUMENT;
    *out = nullptr;
    if (rank < 1) return TUBECC_INVALID_ARGUMENT;
    *out = new (std::nothrow) tubecc_context;
    if (!*out) return TUBECC_INTERNAL;
    (*out)->rank = rank;
    return TUBECC_OK;
}

void tubecc_context_destroy(tubecc_context* ctx) { delete ctx; }

int tubecc_context_rank(const tubecc_context* ctx) { return ctx ? ctx->rank : 0; }

tubecc_status tubecc_set_fuel(tubecc_context* ctx, size_t fuel) {
    return guarded(ctx, [&] {
        if (fuel == 0) fail(ErrorKind::validation, "fuel must be positive");
        ctx->fuel = fuel;
        return TUBECC_OK;
    });
}

const char* tubecc_last_error(const tubecc_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void tubecc_string_free(char* s) { std::free(s); }

tubecc_status tubecc_char(tubecc_context* ctx, const char* module, tubecc_poly** out) {
    return guarded(ctx, [&] {
        need(out, "output");
        *out = nullptr;
        const TubeModule m = parse(ctx, module);
        *out = new tubecc_poly{char_module(m)};
        return TUBECC_OK;
    });
}

tubecc_status tubecc_poly_from_json(tubecc_context* ctx, const char* text, tubecc_poly** out) {
    return guarded(ctx, [&] {
        need(out, "output");
        need(text, "json");
        *out = nullptr;
        LaurentPoly p = LaurentPoly::from_json(text);
        if (p.rank() != ctx->rank) fail(ErrorKind::validation, "polynomial rank differs from the context rank");
        *out = new tubecc_poly{std::move(p)};
        return TUBECC_OK;
    });
}

void tubecc_poly_destroy(tubecc_poly* p) { delete p; }

tubecc_status tubecc_poly_to_string(const tubecc_poly* p, tubecc_format format, char** out) {
    if (!p || !out) return TUBECC_INVALID_ARGUMENT;
    try {
        *out = dup(format == TUBECC_FORMAT_JSON ? p->value.to_json() : p->value.to_string());
        return TUBECC_OK;
    } catch (...) {
        return TUBECC_INTERNAL;
    }
}

tubecc_status tubecc_poly_eval_ones(const tubecc_poly* p, char** out) {
    if (!p || !out) return TUBECC_INVALID_ARGUMENT;
    try {
        *out = dup(p->value.eval_all_ones().get_str());
        return TUBECC_OK;
    } catch (...) {
        return TUBECC_INTERNAL;
    }
}

int tubecc_poly_equal(const tubecc_poly* a, const tubecc_poly* b) {
    if (!a || !b) return 0;
    return a->value == b->value ? 1 : 0;
}

tubecc_status tubecc_mult(tubecc_context* ctx, const char* a, const char* b, tubecc_format format, char** out) {
    return guarded(ctx, [&] {
        need(out, "output");
        const MultResult res = multiply(parse(ctx, a), parse(ctx, b));
        const ProductExpansion& e = res.expansion;
        if (format == TUBECC_FORMAT_JSON) {
            json j{{"rank", ctx->rank},
                   {"first", e.first.to_string()},
                   {"second", e.second.to_string()},
                   {"method", res.method},
                   {"terms", terms_json(e.terms)},
                   {"verified", e.verified}};
            *out = dup(j.dump());
        } else {
            *out = dup(to_string(e) + "\nmethod: " + res.method + "\nverified: " + (e.verified ? "true" : "false"));
        }
        return TUBECC_OK;
    });
}

tubecc_status tubecc_decompose(tubecc_context* ctx, const char* module, tubecc_format format, char** out) {
    return guarded(ctx, [&] {
        need(out, "output");
        DecomposeOptions opt;
        opt.fuel = ctx->fuel;
        const Decomposition d = decompose(parse(ctx, module), opt);
        *out = dup(format == TUBECC_FORMAT_JSON ? to_json(d) : to_string(d));
        return TUBECC_OK;
    });
}

tubecc_status tubecc_decompose_poly(tubecc_context* ctx, const tubecc_poly* target, const int* bound, size_t bound_len,
                                    tubecc_format format, char** out) {
    return guarded(ctx, [&] {
        need(out, "output");
        need(target, "target");
        if (target->value.rank() != ctx->rank) fail(ErrorKind::validation, "polynomial rank differs from the context rank");
        const Decomposition d = decompose_poly(target->value, bound_of(ctx, bound, bound_len));
        *out = dup(format == TUBECC_FORMAT_JSON ? to_json(d) : to_string(d));
        return TUBECC_OK;
    });
}

tubecc_status tubecc_expand_simple_product(tubecc_context* ctx, const int* word, size_t word_len, tubecc_format format,
                                           char** out) {
    return guarded(ctx, [&] {
        need(out, "output");
        if (word_len) need(word, "word");
        const ModuleCombination c = expand_simple_product(ctx->rank, std::vector<int>(word, word + word_len));
        *out = dup(format == TUBECC_FORMAT_JSON ? combination_json(ctx->rank, c).dump() : combination_text(c));
        return TUBECC_OK;
    });
}

tubecc_status tubecc_hom_dim(tubecc_context* ctx, const char* a, const char* b, size_t* out) {
    return guarded(ctx, [&] {
        need(out, "output");
        *out = hom_dim(parse(ctx, a), parse(ctx, b));
        return TUBECC_OK;
    });
}

tubecc_status tubecc_ext_dim(tubecc_context* ctx, const char* a, const char* b, size_t* out) {
    return guarded(ctx, [&] {
        need(out, "output");
        *out = ext1_dim(parse(ctx, a), parse(ctx, b));
        return TUBECC_OK;
    });
}

tubecc_status tubecc_is_rigid(tubecc_context* ctx, const char* module, int* out) {
    return guarded(ctx, [&] {
        need(out, "output");
        *out = is_rigid(parse(ctx, module)) ? 1 : 0;
        return TUBECC_OK;
    });
}

tubecc_status tubecc_independence(tubecc_context* ctx, const char* const* modules, size_t count, tubecc_format format,
                                  int* independent, char** out) {
    return guarded(ctx, [&] {
        need(independent, "output");
        need(out, "output");
        if (count) need(modules, "modules");
        std::vector<TubeModule> family;
        for (std::size_t k = 0; k < count; ++k) family.push_back(parse(ctx, modules[k]));
        const IndependenceResult res = independence_check(family);
        *independent = res.independent ? 1 : 0;
        if (format == TUBECC_FORMAT_JSON) {
            json rel = json::array();
            for (std::size_t k = 0; k < res.relation.size(); ++k) {
                if (res.relation[k] != 0) {
                    rel.push_back({{"coeff", coeff_json(res.relation[k])}, {"module", family[k].to_string()}});
                }
            }
            json j{{"rank", ctx->rank}, {"independent", res.independent}};
            if (!res.independent) j["relation"] = rel;
            *out = dup(j.dump());
        } else {
            std::ostringstream os;
            os << (res.independent ? "independent" : "dependent");
            if (!res.independent) {
                os << "\nrelation: ";
                bool first = true;
                for (std::size_t k = 0; k < res.relation.size(); ++k) {
                    const Integer& c = res.relation[k];
                    if (c == 0) continue;
                    if (!first) os << (c < 0 ? " - " : " + ");
                    else if (c < 0) os << '-';
                    first = false;
                    const Integer mag = abs(c);
                    if (mag != 1) os << mag.get_str() << '*';
                    os << "X[" << family[k].to_string() << ']';
                }
                os << " = 0";
            }
            *out = dup(os.str());
        }
        return TUBECC_OK;
    });
}

tubecc_status tubecc_enumerate_rigid(tubecc_context* ctx, const int* bound, size_t bound_len, tubecc_format format,
                                     char** out) {
    return guarded(ctx, [&] {
        need(out, "output");
        const std::vector<TubeModule> list = enumerate_rigid(ctx->rank, bound_of(ctx, bound, bound_len));
        if (format == TUBECC_FORMAT_JSON) {
            json arr = json::array();
            for (const TubeModule& m : list) arr.push_back(m.to_string());
            *out = dup(json{{"rank", ctx->rank}, {"modules", arr}}.dump());
        } else {
            std::string s;
            for (const TubeModule& m : list) s += m.to_string() + "\n";
            if (!s.empty()) s.pop_back();
            *out = dup(s);
        }
        return TUBECC_OK;
    });
}

void tubecc_verify_config_default(tubecc_verify_config* cfg) {
    if (!cfg) return;
    const VerifyConfig d;
    cfg->max_rank = d.max_rank;
    cfg->max_length = d.max_length;
    cfg->seed = d.seed;
    cfg->samples = d.samples;
}

tubecc_status tubecc_verify(tubecc_context* ctx, const char* suite, const tubecc_verify_config* cfg,
                            tubecc_format format, char** out) {
    return guarded(ctx, [&] {
        need(suite, "suite");
        need(out, "output");
        VerifyConfig vc;
        if (cfg) {
            vc.max_rank = cfg->max_rank;
            vc.max_length = cfg->max_length;
            vc.seed = cfg->seed;
            vc.samples = cfg->samples;
        }
        vc.fuel = ctx->fuel;
        const std::vector<SuiteReport> reports = run_verification(suite, vc);
        std::size_t failures = 0;
        std::string text;
        for (const SuiteReport& r : reports) {
            failures += r.failures;
            text += to_string(r) + "\n";
        }
        text += std::to_string(failures) + " failures";
        if (format == TUBECC_FORMAT_JSON) {
            *out = dup(json{{"suites", json::parse(to_json(reports))}, {"failures", failures}}.dump());
        } else {
            *out = dup(text);
        }
        return failures ? TUBECC_VERIFY_FAILED : TUBECC_OK;
    });
}

}  // extern "C"
