#include "tubecc/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tubecc/basis.hpp"
#include "tubecc/character.hpp"
#include "tubecc/error.hpp"
#include "tubecc/multiplication.hpp"
#include "tubecc/tube.hpp"

namespace tubecc {

namespace {

class Runner {
public:
    explicit Runner(std::string suite) { report_.suite = std::move(suite); }

    // Runs one instance; a false result or any exception counts as a failure.
    void check(const std::string& label, const std::string& instance, const std::function<bool()>& body) {
        ++report_.checked;
        ++report_.coverage[label];
        std::string why;
        bool ok = false;
        try {
            ok = body();
            if (!ok) why = "check returned false";
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (ok) return;
        if (report_.failures++ == 0) report_.first_failure = label + ": " + instance + ": " + why;
    }

    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
};

TubeModule random_module(std::mt19937_64& rng, int rank, int max_summands, int max_length) {
    std::uniform_int_distribution<int> count(1, max_summands);
    std::uniform_int_distribution<int> socle(1, rank);
    std::uniform_int_distribution<int> length(1, max_length);
    std::vector<Indec> parts;
    const int k = count(rng);
    for (int t = 0; t < k; ++t) parts.push_back(Indec{socle(rng), length(rng)});
    return TubeModule(rank, std::move(parts));
}

SuiteReport suite_characters(const VerifyConfig& cfg) {
    Runner run("characters");
    for (int r = 1; r <= cfg.max_rank; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int n = 1; n <= cfg.max_length; ++n) {
                const TubeModule m = TubeModule::indec(r, i, n);
                run.check("closed_form", "r=" + std::to_string(r) + " M=" + m.to_string(),
                          [&] { return char_indec_closed(r, Indec{i, n}) == char_definitional(m); });
            }
        }
    }
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        const int r = std::uniform_int_distribution<int>(1, cfg.max_rank)(rng);
        const TubeModule m = random_module(rng, r, 3, cfg.max_length);
        const TubeModule n = random_module(rng, r, 3, cfg.max_length);
        run.check("multiplicative", "r=" + std::to_string(r) + " M=" + m.to_string() + " N=" + n.to_string(),
                  [&] { return char_definitional(m) * char_definitional(n) == char_definitional(m.direct_sum(n)); });
    }
    return run.take();
}

SuiteReport suite_ar(const VerifyConfig& cfg) {
    Runner run("ar");
    for (int r = 1; r <= cfg.max_rank; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int n = 1; n <= cfg.max_length; ++n) {
                const TubeModule m = TubeModule::indec(r, i, n);
                run.check("almost_split", "r=" + std::to_string(r) + " M=" + m.to_string(),
                          [&] { return ar_product(m).verified; });
            }
        }
    }
    return run.take();
}

SuiteReport suite_cluster_mult(const VerifyConfig& cfg) {
    Runner run("cluster_mult");
    for (int r = 1; r <= cfg.max_rank; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= cfg.max_length; ++j) {
                for (int k = 1; k <= r; ++k) {
                    for (int l = 1; l <= cfg.max_length; ++l) {
                        const TubeModule m = TubeModule::indec(r, i, j);
                        const TubeModule n = TubeModule::indec(r, k, l);
                        if (ext1_dim(m, n) != 1 || hom_dim(n, tau(m)) != 1) continue;
                        run.check("triangle", "r=" + std::to_string(r) + " M=" + m.to_string() + " N=" + n.to_string(),
                                  [&] { return cluster_mult(m, n).verified; });
                    }
                }
            }
        }
    }
    return run.take();
}

SuiteReport suite_inductive(const VerifyConfig& cfg) {
    Runner run("inductive");
    for (int r = 1; r <= cfg.max_rank; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= r; ++j) {
                for (int total = 1; total <= cfg.max_length; ++total) {
                    const int m = total / r, l = total % r;
                    for (int k = 1; k <= total; ++k) {
                        const std::string instance = "r=" + std::to_string(r) + " i=" + std::to_string(i) +
                                                     " k=" + std::to_string(k) + " j=" + std::to_string(j) +
                                                     " m=" + std::to_string(m) + " l=" + std::to_string(l);
                        InductiveCase which = InductiveCase::case_1_3;
                        bool ran = false;
                        try {
                            which = inductive_mult(r, i, k, j, m, l).which;
                            ran = true;
                        } catch (const std::exception&) {
                        }
                        const std::string label = ran ? std::string("case_") + to_string(which) : "error";
                        run.check(label, instance, [&] {
                            const InductiveExpansion e = inductive_mult(r, i, k, j, m, l);
                            // Split exactly when there is no extension in either direction.
                            const bool split = ext1_cluster_dim(e.expansion.first, e.expansion.second) == 0;
                            return e.expansion.verified && split == is_split_case(e.which);
                        });
                    }
                }
            }
        }
    }
    return run.take();
}

SuiteReport suite_basis(const VerifyConfig& cfg) {
    Runner run("basis");
    const int top = std::min(cfg.max_rank, 4);
    for (int r = 2; r <= cfg.max_rank; ++r) {
        for (int i = 1; i <= r; ++i) {
            run.check("rank_reduction", "r=" + std::to_string(r) + " i=" + std::to_string(i),
                      [&] { return lemma_rank_reduction(r, i).verified; });
        }
    }
    for (int r = 1; r <= top; ++r) {
        for (int b = 1; b <= 2; ++b) {
            const DimVector bound(r, std::vector<int>(static_cast<std::size_t>(r), b));
            const std::vector<TubeModule> family = enumerate_rigid(r, bound);
            const std::string instance = "r=" + std::to_string(r) + " bound=" + bound.to_string();
            run.check("rigid_closed_under_tau", instance, [&] {
                for (const TubeModule& m : family) {
                    if (!is_rigid(m)) return false;
                    if (!std::binary_search(family.begin(), family.end(), tau(m))) return false;
                }
                return true;
            });
            run.check("independence", instance, [&] { return independence_check(family).independent; });
        }
    }
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    const int max_len = [&] { return cfg.max_length; }();
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        const int r = std::uniform_int_distribution<int>(1, top)(rng);
        const TubeModule m = random_module(rng, r, 3, std::min(max_len, 2 * r + 1));
        run.check("decompose", "r=" + std::to_string(r) + " M=" + m.to_string(), [&] {
            DecomposeOptions opt;
            opt.fuel = cfg.fuel;
            const DecompositionReport rep = decompose_report(m, opt);
            return rep.rewriting && *rep.rewriting == rep.elimination &&
                   evaluate(r, rep.result.coeffs) == char_module(m);
        });
    }
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        const int r = std::uniform_int_distribution<int>(1, top)(rng);
        const DimVector bound(r, std::vector<int>(static_cast<std::size_t>(r), 2));
        const std::vector<TubeModule> family = enumerate_rigid(r, bound);
        const TubeModule t = family[std::uniform_int_distribution<std::size_t>(0, family.size() - 1)(rng)];
        run.check("triangular", "r=" + std::to_string(r) + " T=" + t.to_string(), [&] {
            std::vector<std::vector<int>> rays;
            for (const Indec& e : t.summands()) {
                std::vector<int> ray;
                for (int q = 0; q < e.length; ++q) ray.push_back(e.socle + q);
                rays.push_back(std::move(ray));
            }
            const ModuleCombination c = expand_ray_product(r, rays);
            const DimVector d = dim_vector(t);
            std::size_t same = 0;
            for (const auto& [key, coeff] : c) {
                const DimOrder o = dim_order_cmp(dim_vector(key), d);
                if (o == DimOrder::equal) {
                    if (key != t || coeff != 1) return false;
                    ++same;
                } else if (o != DimOrder::less) {
                    return false;
                }
            }
            return same == 1;
        });
    }
    return run.take();
}

}  // namespace

const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> names{"characters", "ar", "cluster_mult", "inductive", "basis"};
    return names;
}

std::vector<SuiteReport> run_verification(const std::string& suite, const VerifyConfig& config) {
    if (config.max_rank < 1 || config.max_length < 1) fail(ErrorKind::validation, "verification bounds must be positive");
    std::vector<SuiteReport> out;
    auto one = [&](const std::string& name) {
        std::function<SuiteReport(const VerifyConfig&)> run;
        if (name == "characters") run = suite_characters;
        else if (name == "ar") run = suite_ar;
        else if (name == "cluster_mult") run = suite_cluster_mult;
        else if (name == "inductive") run = suite_inductive;
        else if (name == "basis") run = suite_basis;
        else fail(ErrorKind::validation, "unknown verification suite '" + name + "'");
        // An exception outside a single check aborts the suite and counts as one failure.
        try {
            out.push_back(run(config));
        } catch (const std::exception& e) {
            SuiteReport aborted;
            aborted.suite = name;
            aborted.failures = 1;
            aborted.first_failure = std::string("suite aborted: ") + e.what();
            out.push_back(std::move(aborted));
        }
    };
    if (suite == "all") {
        for (const std::string& name : verification_suites()) one(name);
    } else {
        one(suite);
    }
    return out;
}

std::string to_string(const SuiteReport& report) {
    std::ostringstream os;
    os << report.suite << ": " << report.checked << " checked, " << report.failures << " failures";
    for (const auto& [label, n] : report.coverage) os << "\n  " << label << ": " << n;
    if (report.failures) os << "\n  first failure: " << report.first_failure;
    return os.str();
}

std::string to_json(const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const SuiteReport& r : reports) {
        nlohmann::ordered_json s;
        s["suite"] = r.suite;
        s["checked"] = r.checked;
        s["failures"] = r.failures;
        s["coverage"] = r.coverage;
        if (r.failures) s["first_failure"] = r.first_failure;
        j.push_back(std::move(s));
    }
    return j.dump();
}

}  // namespace tubecc
