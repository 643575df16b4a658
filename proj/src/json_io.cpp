#include "f2add/json_io.hpp"

#include "f2add/errors.hpp"

namespace f2add {

Json set_to_json(const DenseSet& s) {
    Json j;
    j["dim"] = s.dim();
    j["elements"] = s.elements();
    return j;
}

DenseSet set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("elements")) {
        throw BadSpec("set literal must be {\"dim\": n, \"elements\": [...]}");
    }
    const int dim = j.at("dim").get<int>();
    DenseSet s(dim);
    for (const auto& e : j.at("elements")) {
        const auto v = e.get<std::uint64_t>();
        if (v >= (std::uint64_t(1) << dim)) throw BadSpec("set element out of range");
        s.insert(static_cast<std::uint32_t>(v));
    }
    return s;
}

Json generator_spec_to_json(const GeneratorSpec& spec) {
    Json j;
    j["family"] = family_name(spec.family);
    j["dim"] = spec.dim;
    j["seed"] = spec.seed;
    switch (spec.family) {
        case Family::Subspace:
        case Family::Affine:
            j["rank"] = spec.rank < 0 ? spec.dim / 2 : spec.rank;
            break;
        case Family::CosetUnion:
            j["rank"] = spec.rank < 0 ? spec.dim / 2 : spec.rank;
            j["cosets"] = spec.cosets;
            break;
        case Family::SubspacePlusNoise:
            j["rank"] = spec.rank < 0 ? spec.dim / 2 : spec.rank;
            j["noise"] = spec.noise;
            break;
        case Family::IndependentVectors:
            j["count"] = spec.count < 0 ? spec.dim : spec.count;
            break;
        case Family::Random:
            j["density"] = rational_to_string(spec.density);
            break;
    }
    return j;
}

namespace {

Json trace_step_to_json(const TraceStep& step, bool doubling_path) {
    Json s;
    s["witness"] = step.witness.bits;
    Json wd = Json::array();
    for (const auto& d : step.witness_data) {
        Json e;
        e["walsh"] = d.walsh;
        e["in_spec_high"] = d.in_spec_high;
        e["in_spec_delta"] = d.in_spec_delta;
        wd.push_back(std::move(e));
    }
    s["witness_data"] = std::move(wd);
    if (doubling_path) {
        s["chosen"] = {step.chosen[0], step.chosen[1]};
        s["metric"] = "dbl_squared";
    } else {
        s["chosen"] = {step.chosen[0], step.chosen[1], step.chosen[2], step.chosen[3]};
        s["metric"] = "omega4";
    }
    s["sizes_before"] = step.sizes_before;
    s["sizes_after"] = step.sizes_after;
    s["before"] = rational_to_string(step.metric_before);
    s["after"] = rational_to_string(step.metric_after);
    s["before_approx"] = step.metric_before.convert_to<double>();
    s["after_approx"] = step.metric_after.convert_to<double>();
    return s;
}

Json subspace_to_json(const Subspace& h) {
    Json j;
    j["basis"] = h.basis();
    j["rank"] = h.rank();
    j["size"] = h.size();
    return j;
}

std::vector<std::uint32_t> translate_bits(const std::vector<GF2Vector>& ts) {
    std::vector<std::uint32_t> out;
    out.reserve(ts.size());
    for (auto t : ts) out.push_back(t.bits);
    return out;
}

}  // namespace

Json theorem_result_to_json(const TheoremResult& result) {
    const bool doubling_path = result.kind != PipelineKind::Bsg;
    Json j;
    j["trace_version"] = 1;
    j["pipeline"] = pipeline_kind_name(result.kind);
    j["dim"] = result.dim;
    j["fixed_k"] = result.fixed_k;

    Json inputs = Json::array();
    for (const auto& s : result.inputs) inputs.push_back(set_to_json(s));
    j["inputs"] = std::move(inputs);

    if (result.k_rational) j["k"] = rational_to_string(*result.k_rational);
    j["k_squared"] = rational_to_string(result.k_squared);

    j["h"] = subspace_to_json(result.h);
    j["translates"] = translate_bits(result.translates);
    j["intersections"] = result.intersections;

    Json cert;
    cert["form"] = result.certificate.form;
    cert["lhs"] = result.certificate.lhs.str();
    cert["rhs"] = result.certificate.rhs.str();
    cert["passed"] = result.certificate.passed;
    j["certificate"] = std::move(cert);

    Json ex;
    ex["H_basis"] = result.extraction.h.basis();
    ex["translates"] = translate_bits(
        {result.extraction.translates.begin(), result.extraction.translates.end()});
    ex["intersections"] = result.extraction.intersections;
    Json checks;
    checks["hlower"] = result.extraction.hlower;
    checks["alower"] = result.extraction.alower;
    ex["checks"] = std::move(checks);
    if (result.extraction.k_squared) {
        ex["K_squared"] = rational_to_string(*result.extraction.k_squared);
    }
    ex["K_fourth"] = rational_to_string(result.extraction.k_fourth);
    ex["lambda_size"] = result.extraction.lambda_size;
    j["extraction"] = std::move(ex);

    Json refined = Json::array();
    for (const auto& s : result.refined) refined.push_back(set_to_json(s));
    j["refined"] = std::move(refined);

    Json trace;
    trace["iterations"] = result.trace.iterations;
    trace["budget"] = result.trace.budget;
    trace["terminal_flat"] = result.trace.terminal_flat;
    Json ratios = Json::array();
    for (const auto& r : result.trace.h_ratio) {
        Json e;
        e["exact"] = rational_to_string(r);
        e["approx"] = r.convert_to<double>();
        ratios.push_back(std::move(e));
    }
    trace["h_ratio"] = std::move(ratios);
    Json steps = Json::array();
    for (const auto& s : result.trace.steps) steps.push_back(trace_step_to_json(s, doubling_path));
    trace["steps"] = std::move(steps);
    j["trace"] = std::move(trace);
    return j;
}

namespace {

BigInt big_from_json_string(const Json& j) { return BigInt(j.get<std::string>()); }

void check(std::vector<std::string>& failures, bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
}

}  // namespace

std::vector<std::string> recheck_report(const Json& report) {
    std::vector<std::string> failures;
    try {
        const std::string kind = report.at("pipeline").get<std::string>();
        const int dim = report.at("dim").get<int>();

        std::vector<DenseSet> inputs;
        for (const auto& s : report.at("inputs")) inputs.push_back(set_from_json(s));
        std::vector<DenseSet> refined;
        for (const auto& s : report.at("refined")) refined.push_back(set_from_json(s));

        const auto basis = report.at("h").at("basis").get<std::vector<std::uint32_t>>();
        const Subspace h = Subspace::span_of(dim, basis);
        check(failures, h.rank() == static_cast<int>(basis.size()),
              "H basis is not linearly independent");
        check(failures, h.size() == report.at("h").at("size").get<std::uint64_t>(),
              "serialized |H| disagrees with basis rank");

        const auto translates = report.at("translates").get<std::vector<std::uint32_t>>();
        const auto inters = report.at("intersections").get<std::vector<std::uint64_t>>();
        check(failures, translates.size() == inters.size() && translates.size() == inputs.size(),
              "translate/intersection/input arity mismatch");
        for (std::size_t i = 0; i < translates.size() && i < inputs.size(); ++i) {
            const std::uint64_t c =
                coset_intersection(inputs[i], h, GF2Vector{translates[i], dim});
            check(failures, i < inters.size() && c == inters[i],
                  "intersection count " + std::to_string(i) + " does not recompute");
        }

        // Final certificate, re-derived from k and the recomputed counts.
        const Rational k2 = rational_from_string(report.at("k_squared").get<std::string>());
        const BigInt hsize(h.size());
        BigInt lhs, rhs;
        if (kind == "freiman") {
            lhs = BigInt(inters.at(0)) * inters.at(1) * 4 * boost::multiprecision::numerator(k2);
            rhs = hsize * hsize * boost::multiprecision::denominator(k2);
        } else if (kind == "freiman_single") {
            lhs = BigInt(inters.at(0)) * inters.at(0) * 4 * boost::multiprecision::numerator(k2);
            rhs = hsize * hsize * boost::multiprecision::denominator(k2);
        } else if (kind == "bsg") {
            const Rational k = rational_from_string(report.at("k").get<std::string>());
            const Rational k4 = k * k * k * k;
            BigInt prod = 1;
            for (auto c : inters) prod *= c;
            lhs = prod * 16 * boost::multiprecision::numerator(k4);
            rhs = hsize * hsize * hsize * hsize * boost::multiprecision::denominator(k4);
        } else {
            failures.push_back("unknown pipeline kind: " + kind);
            return failures;
        }
        const auto& cert = report.at("certificate");
        check(failures, lhs >= rhs, "final certificate inequality fails on recheck");
        check(failures, big_from_json_string(cert.at("lhs")) == lhs,
              "serialized certificate lhs does not recompute");
        check(failures, big_from_json_string(cert.at("rhs")) == rhs,
              "serialized certificate rhs does not recompute");
        check(failures, cert.at("passed").get<bool>(), "report marked failed");

        // Extraction inequalities against the refined sets.
        const auto& ex = report.at("extraction");
        const auto ex_basis = ex.at("H_basis").get<std::vector<std::uint32_t>>();
        const Subspace eh = Subspace::span_of(dim, ex_basis);
        check(failures, eh == h, "extraction H differs from reported H");

        std::vector<const DenseSet*> quad;
        if (refined.size() == 2) {
            quad = {&refined[0], &refined[1], &refined[0], &refined[1]};
        } else if (refined.size() == 4) {
            quad = {&refined[0], &refined[1], &refined[2], &refined[3]};
        } else {
            failures.push_back("refined set arity must be 2 or 4");
            return failures;
        }
        const auto ex_tr = ex.at("translates").get<std::vector<std::uint32_t>>();
        const auto ex_in = ex.at("intersections").get<std::vector<std::uint64_t>>();
        BigInt prod = 1, size_prod = 1;
        for (int i = 0; i < 4; ++i) {
            const std::uint64_t c =
                coset_intersection(*quad[i], h, GF2Vector{ex_tr.at(i), dim});
            check(failures, c == ex_in.at(i),
                  "extraction intersection " + std::to_string(i) + " does not recompute");
            prod *= c;
            size_prod *= quad[i]->size();
        }
        const BigInt h4 = hsize * hsize * hsize * hsize;
        check(failures, h4 * 625 >= 256 * size_prod, "hlower fails on recheck");
        const Rational k4 = rational_from_string(ex.at("K_fourth").get<std::string>());
        check(failures,
              prod * 16 * boost::multiprecision::numerator(k4) >=
                  h4 * boost::multiprecision::denominator(k4),
              "alower fails on recheck");
        if (ex.contains("K_squared")) {
            const Rational ks = rational_from_string(ex.at("K_squared").get<std::string>());
            check(failures, ks * ks == k4, "K_squared is not the square root of K_fourth");
        }
    } catch (const std::exception& e) {
        failures.push_back(std::string("recheck aborted: ") + e.what());
    }
    return failures;
}

}  // namespace f2add
