// Command-line front end for multicyclic code construction.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <multicyclic/multicyclic.hpp>

namespace mc = multicyclic;

namespace {

constexpr int exit_validation = 2;
constexpr int exit_order = 3;
constexpr int exit_budget = 4;
constexpr int exit_infeasible = 5;
constexpr int exit_verify = 6;
constexpr int exit_mismatch = 7;

struct FieldArgs {
    std::uint32_t p = 0;
    unsigned m = 1;
    std::string modulus;
    std::string lengths;
    std::string format = "text";
    std::uint64_t seed = 0;

    mc::Field field() const {
        std::optional<std::vector<std::uint32_t>> mod;
        if (!modulus.empty()) mod = mc::parse_uint_list(modulus);
        unsigned degree = m;
        if (mod && degree == 1 && mod->size() > 2) degree = static_cast<unsigned>(mod->size() - 1);
        return mc::Field(p, degree, mod);
    }

    mc::Ring ring() const {
        auto n = mc::parse_uint_list(lengths);
        if (n.empty()) throw mc::Error(mc::Errc::invalid_argument, "--lengths is empty");
        return mc::Ring(field(), n);
    }
};

void add_field_options(CLI::App* cmd, FieldArgs& args, bool with_lengths) {
    cmd->add_option("--p", args.p, "field characteristic")->required();
    cmd->add_option("--m", args.m, "extension degree");
    cmd->add_option("--modulus", args.modulus, "irreducible modulus, base-p coefficients low degree first");
    if (with_lengths) cmd->add_option("--lengths", args.lengths, "axis lengths n_1,...,n_r")->required();
    cmd->add_option("--seed", args.seed, "seed for randomized paths");
}

std::string normalized_format(const std::string& format) {
    if (format == "structured" || format == "json-like-structured") return "json";
    return format;
}

int exit_code_for(const mc::Error& err) {
    switch (err.code()) {
        case mc::Errc::order_not_dividing: return exit_order;
        case mc::Errc::budget_exceeded: return exit_budget;
        case mc::Errc::infeasible: return exit_infeasible;
        case mc::Errc::rank_deficient: return 1;
        default: return exit_validation;
    }
}

int run_construct(const FieldArgs& args, const std::string& seeds, std::uint64_t budget, bool exact, bool literal) {
    const mc::Ring ring = args.ring();
    const auto seed_list = mc::parse_index_list(seeds);
    mc::DistanceOptions options{budget, exact};
    const mc::CodeRecord rec = mc::construct(ring, seed_list, options);
    const std::string format = normalized_format(args.format);

    std::optional<mc::PolyTensor> literal_e;
    bool literal_idempotent = false;
    if (literal) {
        literal_e = mc::monomial_sum(ring, rec.defining_set);
        literal_idempotent = ring.mul(*literal_e, *literal_e) == *literal_e;
    }

    if (format == "json") {
        auto doc = mc::record_json(ring, rec);
        if (literal) {
            doc["literal_step3"] = {{"polynomial", ring.to_string(*literal_e)}, {"idempotent", literal_idempotent}};
        }
        std::cout << doc.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << mc::generator_csv(ring, rec.generator);
    } else {
        std::cout << mc::record_text(ring, rec);
        if (literal) {
            std::cout << "literal step-3 sum: " << ring.to_string(*literal_e)
                      << (literal_idempotent ? " (idempotent)" : " (not idempotent)") << '\n';
        }
    }
    return 0;
}

int run_search(const FieldArgs& args, std::size_t K, std::uint64_t budget, std::size_t top,
               const std::string& objective, std::size_t samples) {
    const mc::Ring ring = args.ring();
    mc::SearchOptions options;
    options.distance.budget = budget;
    options.seed = args.seed;
    options.top = top;
    options.samples = samples;
    if (objective == "product-bound") {
        options.objective = mc::Objective::product_bound;
    } else if (objective != "distance") {
        throw mc::Error(mc::Errc::invalid_argument, "unknown objective '" + objective + "'");
    }
    const mc::SearchResult result = mc::search(ring, K, options);
    const std::string format = normalized_format(args.format);

    auto d_text = [](const mc::CodeRecord& c) { return c.d ? std::to_string(*c.d) : std::string("?"); };
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["field"] = mc::field_json(ring.field());
        doc["lengths"] = ring.lengths();
        doc["K"] = K;
        doc["exhaustive"] = result.exhaustive;
        doc["candidates"] = result.candidates;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& c : result.codes) {
            nlohmann::ordered_json row;
            row["defining_set"] = mc::format_index_list(c.defining_set.indices());
            row["d"] = c.d ? nlohmann::ordered_json(*c.d) : nlohmann::ordered_json(nullptr);
            row["k_profile"] = c.k_profile;
            row["product_bound"] = c.product_bound.value;
            row["product_bound_applicable"] = c.product_bound.applicable;
            row["singleton_bound"] = c.singleton_bound;
            rows.push_back(std::move(row));
        }
        doc["results"] = std::move(rows);
        std::cout << doc.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "rank,d,K,product_bound,applicable,singleton_bound,defining_set\n";
        std::size_t rank = 1;
        for (const auto& c : result.codes) {
            std::cout << rank++ << ',' << d_text(c) << ',' << c.K << ',' << c.product_bound.value << ','
                      << (c.product_bound.applicable ? "true" : "false") << ',' << c.singleton_bound << ",\""
                      << mc::format_index_list(c.defining_set.indices()) << "\"\n";
        }
    } else {
        std::cout << "search K=" << K << " over " << result.candidates << " defining sets ("
                  << (result.exhaustive ? "exhaustive" : "sampled") << ")\n";
        std::cout << "rank  d  bound  singleton  defining set\n";
        std::size_t rank = 1;
        for (const auto& c : result.codes) {
            std::cout << rank++ << "  " << d_text(c) << "  " << c.product_bound.value
                      << (c.product_bound.applicable ? "" : "*") << "  " << c.singleton_bound << "  "
                      << mc::format_index_list(c.defining_set.indices()) << '\n';
        }
        std::cout << "(* product bound not applicable)\n";
    }
    return 0;
}

int run_verify(const FieldArgs& args, std::size_t trials) {
    const mc::Ring ring = args.ring();
    mc::VerifyOptions options;
    options.seed = args.seed;
    options.trials = trials;
    const auto results = mc::verify_ring(ring, options);
    bool all = true;
    if (normalized_format(args.format) == "json") {
        nlohmann::ordered_json doc;
        doc["field"] = mc::field_json(ring.field());
        doc["lengths"] = ring.lengths();
        auto props = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            all = all && r.passed;
            props.push_back({{"property", r.name}, {"passed", r.passed}, {"counterexample", r.detail}});
        }
        doc["properties"] = std::move(props);
        doc["all_passed"] = all;
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            all = all && r.passed;
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.passed) std::cout << ": " << r.detail;
            std::cout << '\n';
        }
    }
    return all ? 0 : exit_verify;
}

struct WorkedRow {
    std::size_t K;
    const char* seeds;
    std::size_t basis_size;
    std::size_t d;
};

int run_reproduce(const std::string& format_arg) {
    const mc::Ring ring(mc::Field(3), {2, 2, 2});
    const WorkedRow table[] = {
        {3, "(0,0,0);(1,0,0);(0,1,0)", 3, 4},
        {4, "(0,0,0);(0,0,1);(0,1,0);(1,0,0)", 4, 4},
    };
    const std::string expected_e = "2x + 2y + xy + 2xz + 2yz + xyz";
    const std::vector<std::vector<std::uint32_t>> expected_G = {
        {0, 2, 2, 0, 1, 2, 2, 1}, {2, 0, 1, 2, 2, 0, 1, 2}, {2, 1, 0, 2, 2, 1, 0, 2}};

    std::vector<std::string> mismatches;
    std::vector<mc::CodeRecord> records;
    for (const auto& row : table) {
        records.push_back(mc::construct(ring, mc::parse_index_list(row.seeds)));
        const auto& rec = records.back();
        const std::string tag = "K=" + std::to_string(row.K) + ": ";
        if (rec.K != row.K) mismatches.push_back(tag + "dimension " + std::to_string(rec.K));
        if (rec.generator.rows() != row.basis_size)
            mismatches.push_back(tag + "basis size " + std::to_string(rec.generator.rows()));
        if (!rec.d || *rec.d != row.d) mismatches.push_back(tag + "distance differs");
    }
    const auto& k3 = records.front();
    const std::string e_text = ring.to_string(k3.idempotent);
    if (e_text != expected_e) mismatches.push_back("K=3: idempotent " + e_text);
    bool g_matches = k3.generator.rows() == expected_G.size();
    for (std::size_t r = 0; g_matches && r < expected_G.size(); ++r) {
        for (std::size_t c = 0; c < expected_G[r].size(); ++c) {
            g_matches = g_matches && k3.generator.at(r, c).value == expected_G[r][c];
        }
    }
    if (!g_matches) mismatches.push_back("K=3: generator matrix differs");
    if (k3.product_bound.applicable) mismatches.push_back("K=3: product bound unexpectedly applicable");

    if (normalized_format(format_arg) == "json") {
        nlohmann::ordered_json doc;
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& rec = records[i];
            rows.push_back({{"K", rec.K},
                            {"T", mc::format_index_list(rec.defining_set.indices())},
                            {"basis_size", rec.generator.rows()},
                            {"d", rec.d ? nlohmann::ordered_json(*rec.d) : nlohmann::ordered_json(nullptr)},
                            {"k_profile", rec.k_profile},
                            {"product_bound", rec.product_bound.value},
                            {"product_bound_applicable", rec.product_bound.applicable}});
        }
        doc["table"] = std::move(rows);
        doc["idempotent"] = e_text;
        doc["generator"] = mc::matrix_json(k3.generator);
        doc["matches"] = mismatches.empty();
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "R = F_3[x,y,z]/<x^2-1, y^2-1, z^2-1>\n\n";
        std::cout << "K  T                                basis  d  k_profile  product_bound\n";
        for (const auto& rec : records) {
            std::string t = mc::format_index_list(rec.defining_set.indices());
            t.resize(std::max<std::size_t>(t.size(), 32), ' ');
            std::cout << rec.K << "  " << t << " " << rec.generator.rows() << "      " << *rec.d << "  ";
            for (std::size_t i = 0; i < rec.k_profile.size(); ++i) std::cout << (i ? "," : "") << rec.k_profile[i];
            std::cout << "      " << rec.product_bound.value
                      << (rec.product_bound.applicable ? " (applicable)" : " (not applicable)") << '\n';
        }
        std::cout << "\ne = " << e_text << "\n\nG =\n";
        for (std::size_t r = 0; r < k3.generator.rows(); ++r) {
            std::cout << "  ";
            for (std::size_t c = 0; c < k3.generator.cols(); ++c) std::cout << (c ? " " : "") << k3.generator.at(r, c).value;
            std::cout << '\n';
        }
    }
    for (const auto& m : mismatches) std::cerr << "mismatch: " << m << '\n';
    return mismatches.empty() ? 0 : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multicyclic code construction over finite fields"};
    app.require_subcommand(1);

    FieldArgs construct_args, search_args, verify_args;
    std::string seeds;
    std::uint64_t construct_budget = 3'000'000, search_budget = 3'000'000;
    bool exact = false, literal = false;
    auto* construct = app.add_subcommand("construct", "build a code from a seed set");
    add_field_options(construct, construct_args, true);
    construct->add_option("--seeds", seeds, "seed multi-indices, e.g. \"(0,0,0);(1,0,0)\"")->required();
    construct->add_option("--budget", construct_budget, "codeword budget for exact distance");
    construct->add_flag("--exact", exact, "fail when the exact distance exceeds the budget");
    construct->add_flag("--literal-step3", literal, "also report the monomial-sum polynomial");
    construct->add_option("--format", construct_args.format, "text | json | csv");

    std::size_t K = 0, top = 10, samples = 2000;
    std::string objective = "distance";
    auto* search = app.add_subcommand("search", "rank codes of a given dimension");
    add_field_options(search, search_args, true);
    search->add_option("--K", K, "target dimension")->required();
    search->add_option("--budget", search_budget, "codeword budget per code");
    search->add_option("--top", top, "number of results to print (0 = all)");
    search->add_option("--objective", objective, "distance | product-bound");
    search->add_option("--samples", samples, "selections drawn when sampling");
    search->add_option("--format", search_args.format, "text | json | csv");

    std::size_t trials = 100;
    auto* verify = app.add_subcommand("verify", "check the algebraic properties of a ring");
    add_field_options(verify, verify_args, true);
    verify->add_option("--trials", trials, "random trials per property");
    verify->add_option("--format", verify_args.format, "text | json");

    std::string reproduce_format = "text";
    auto* reproduce = app.add_subcommand("reproduce", "rebuild the F_3 (2,2,2) worked example");
    reproduce->add_option("--format", reproduce_format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_validation;
    }

    try {
        for (const FieldArgs* a : {&construct_args, &search_args, &verify_args}) {
            const auto f = normalized_format(a->format);
            if (f != "text" && f != "json" && f != "csv")
                throw mc::Error(mc::Errc::invalid_argument, "unknown format '" + a->format + "'");
        }
        if (*construct) return run_construct(construct_args, seeds, construct_budget, exact, literal);
        if (*search) return run_search(search_args, K, search_budget, top, objective, samples);
        if (*verify) return run_verify(verify_args, trials);
        if (*reproduce) return run_reproduce(reproduce_format);
    } catch (const mc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return exit_validation;
}
