// qgl2: classify quantum-plane structures into the two GL(2) quantum-group
// families, derive quantum-matrix relations, and run seeded self-tests.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgl2/classify.hpp"
#include "qgl2/manin.hpp"
#include "qgl2/sampling.hpp"

using json = nlohmann::ordered_json;
using namespace qgl2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitInternal = 3;

Rational require_rational(const std::string& text, const std::string& flag) {
    auto r = parse_rational(text);
    if (!r) {
        std::cerr << "error: " << flag << " expects a rational ([-]digits[/digits]), got '"
                  << text << "'\n";
        std::exit(kExitUsage);
    }
    return *r;
}

json transform_json(const Transform2& s) {
    return json::array({to_string(s.m11), to_string(s.m12), to_string(s.m21),
                        to_string(s.m22)});
}

struct ClassifyOutcome {
    Classification result;
    bool similarity_checked = false;
    bool similarity_ok = false;
};

json report_json(const std::string& h0, const std::string& r0, const std::string& p0,
                 const ClassifyOutcome& out) {
    const Classification& c = out.result;
    json rep;
    rep["input"] = {{"h0", h0}, {"r0", r0}, {"p0", p0}};
    rep["case"] = to_string(c.tag);
    rep["discriminant"] = {
        {"value", to_string(c.discriminant)},
        {"is_perfect_square", sqrt_exact(c.discriminant.rational_part()).has_value()}};
    rep["extension_D"] = to_string(c.extension.D);
    if (c.transform) rep["transform"] = transform_json(*c.transform);
    else rep["transform"] = nullptr;
    switch (c.tag) {
        case CaseTag::DrinfeldJimbo:
            rep["q"] = to_string(c.q);
            rep["p"] = to_string(*c.p);
            rep["reciprocal_p"] =
                c.p->is_zero() ? json(nullptr) : json(to_string(c.p->inverse()));
            break;
        case CaseTag::Jordanian:
            rep["h"] = to_string(c.h);
            rep["h_prime"] = to_string(*c.h_prime);
            break;
        default:
            break;
    }
    rep["verified"] = c.verified;
    rep["similarity_checked"] = out.similarity_checked;
    if (out.similarity_checked) rep["similarity_ok"] = out.similarity_ok;
    json notes = json::array();
    if (!c.note.empty()) notes.push_back(c.note);
    rep["notes"] = notes;
    return rep;
}

void print_human(const json& rep) {
    std::cout << "case: " << rep["case"].get<std::string>() << "\n";
    std::cout << "discriminant: " << rep["discriminant"]["value"].get<std::string>()
              << (rep["discriminant"]["is_perfect_square"].get<bool>()
                      ? " (perfect square)"
                      : " (not a perfect square)")
              << "\n";
    std::cout << "extension: Q(sqrt(" << rep["extension_D"].get<std::string>() << "))\n";
    if (!rep["transform"].is_null()) {
        const auto& t = rep["transform"];
        std::cout << "transform rows: (" << t[0].get<std::string>() << ", "
                  << t[1].get<std::string>() << "), (" << t[2].get<std::string>()
                  << ", " << t[3].get<std::string>() << ")\n";
    }
    if (rep.contains("p")) {
        std::cout << "q = " << rep["q"].get<std::string>() << "\n";
        std::cout << "p = " << rep["p"].get<std::string>() << "\n";
        if (!rep["reciprocal_p"].is_null())
            std::cout << "1/p = " << rep["reciprocal_p"].get<std::string>()
                      << " (root exchange gives the reciprocal)\n";
    }
    if (rep.contains("h_prime")) {
        std::cout << "h = " << rep["h"].get<std::string>() << "\n";
        std::cout << "h' = " << rep["h_prime"].get<std::string>() << "\n";
    }
    std::cout << "verified: " << (rep["verified"].get<bool>() ? "yes" : "no") << "\n";
    if (rep["similarity_checked"].get<bool>())
        std::cout << "similarity: " << (rep["similarity_ok"].get<bool>() ? "ok" : "FAILED")
                  << "\n";
    for (const auto& note : rep["notes"])
        std::cout << "note: " << note.get<std::string>() << "\n";
}

int run_classify(const std::string& h0s, const std::string& r0s, const std::string& p0s,
                 bool verify, bool similarity, bool as_json) {
    const Rational h0 = require_rational(h0s, "--h0");
    const Rational r0 = require_rational(r0s, "--r0");
    const Rational p0 = require_rational(p0s, "--p0");

    ClassifyOutcome out;
    out.result = classify(h0, r0, p0);
    const Classification& c = out.result;

    if (similarity && c.tag != CaseTag::Degenerate) {
        out.similarity_checked = true;
        const Plane source = input_plane(Scalar(h0), Scalar(r0), Scalar(p0));
        out.similarity_ok =
            check_similarity(source, canonical_plane(c), *c.transform).ok;
    }

    const json rep = report_json(h0s, r0s, p0s, out);
    if (as_json)
        std::cout << rep.dump(2) << "\n";
    else
        print_human(rep);

    if (c.tag == CaseTag::Degenerate) return kExitDegenerate;
    if (verify && !c.verified) return kExitInternal;
    if (out.similarity_checked && !out.similarity_ok) return kExitInternal;
    return kExitOk;
}

int run_manin(const Plane& plane, bool as_json) {
    const ManinRelationSet rels = manin_relations(plane);
    if (as_json) {
        json rep;
        rep["plane"] = to_string(plane);
        json list = json::array();
        for (const auto& r : rels.relations) list.push_back(to_string(r));
        rep["relations"] = list;
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << to_string(plane) << "\n";
        for (const auto& r : rels.relations) std::cout << to_string(r) << " = 0\n";
    }
    return kExitOk;
}

int run_selftest(int count, std::uint64_t seed, unsigned height) {
    RationalSampler gen(seed, height);
    std::map<std::string, int> tag_counts;
    int verified = 0, failures = 0;
    for (int i = 0; i < count; ++i) {
        const Rational h0 = gen.next(), r0 = gen.next(), p0 = gen.next();
        const Classification c = classify(h0, r0, p0);
        ++tag_counts[to_string(c.tag)];
        if (c.tag == CaseTag::Degenerate) {
            if (p0 != -1 || h0 * r0 != 1) ++failures;
            continue;
        }
        if (!c.verified) {
            ++failures;
            continue;
        }
        const Plane source = input_plane(Scalar(h0), Scalar(r0), Scalar(p0));
        if (!check_similarity(source, canonical_plane(c), *c.transform).ok) {
            ++failures;
            continue;
        }
        ++verified;
    }
    for (const auto& [tag, n] : tag_counts)
        std::cout << tag << ": " << n << "\n";
    std::cout << verified << "/" << count << " verified";
    if (tag_counts.count("Degenerate"))
        std::cout << " (" << tag_counts["Degenerate"] << " degenerate)";
    std::cout << "\n";
    std::cout << "failures: " << failures << "\n";
    return failures == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification of quantum-plane structures on GL(2)"};
    app.require_subcommand(1);

    std::string h0s, r0s, p0s;
    bool verify = false, similarity = false, as_json = false;
    auto* cls = app.add_subcommand("classify",
                                   "Classify a plane given by (h0, r0, p0)");
    cls->add_option("--h0", h0s, "xi^2 coefficient")->required();
    cls->add_option("--r0", r0s, "eta^2 coefficient")->required();
    cls->add_option("--p0", p0s, "eta*xi coefficient (with sign flipped)")->required();
    cls->add_flag("--verify", verify, "fail unless re-expansion confirms the result");
    cls->add_flag("--similarity", similarity,
                  "also check the induced quantum-matrix similarity");
    cls->add_flag("--json", as_json, "machine-readable report");

    std::string family, qs = "1", ps = "1", hs = "0", hps = "0";
    std::string mh0s = "0", mr0s = "0", mp0s = "1";
    bool manin_json = false;
    auto* man = app.add_subcommand("manin", "Print the quantum-matrix relations");
    man->set_help_flag("--help", "print help");  // frees -h / --h for the parameter
    man->add_option("--family", family, "dj | jordan | input")->required();
    man->add_option("--q", qs, "Drinfeld-Jimbo q");
    man->add_option("--p", ps, "Drinfeld-Jimbo p");
    man->add_option("--h", hs, "Jordanian h");
    man->add_option("--hp", hps, "Jordanian h'");
    man->add_option("--h0", mh0s, "input-plane h0");
    man->add_option("--r0", mr0s, "input-plane r0");
    man->add_option("--p0", mp0s, "input-plane p0");
    man->add_flag("--json", manin_json, "machine-readable output");

    int count = 100;
    unsigned height = 10;
    std::string seed_text;
    auto* self = app.add_subcommand("selftest", "Seeded randomized verification");
    self->add_option("--count", count, "number of random triples")
        ->check(CLI::PositiveNumber);
    self->add_option("--seed", seed_text, "RNG seed (default env QGL2_SEED or 1)");
    self->add_option("--height", height, "bound on numerators/denominators")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cls->parsed())
            return run_classify(h0s, r0s, p0s, verify, similarity, as_json);
        if (man->parsed()) {
            if (family == "dj") {
                const Rational q = require_rational(qs, "--q");
                if (q == 0) {
                    std::cerr << "error: --q must be nonzero\n";
                    return kExitUsage;
                }
                return run_manin(dj_plane(Scalar(q), Scalar(require_rational(ps, "--p"))),
                                 manin_json);
            }
            if (family == "jordan")
                return run_manin(jordanian_plane(Scalar(require_rational(hs, "--h")),
                                                 Scalar(require_rational(hps, "--hp"))),
                                 manin_json);
            if (family == "input")
                return run_manin(input_plane(Scalar(require_rational(mh0s, "--h0")),
                                             Scalar(require_rational(mr0s, "--r0")),
                                             Scalar(require_rational(mp0s, "--p0"))),
                                 manin_json);
            std::cerr << "error: --family must be dj, jordan, or input\n";
            return kExitUsage;
        }
        if (self->parsed()) {
            std::uint64_t seed = 1;
            if (!seed_text.empty()) {
                seed = std::stoull(seed_text);
            } else if (const char* env = std::getenv("QGL2_SEED")) {
                seed = std::stoull(env);
            }
            return run_selftest(count, seed, height);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
