#include "linkform_cli/report.hpp"

#include <algorithm>

#include "linkform/bss.hpp"
#include "linkform/duality.hpp"
#include "linkform/errors.hpp"
#include "linkform/steenrod.hpp"

namespace linkform::cli {

namespace {

const char* status(bool ok)
{
    return ok ? "PASS" : "FAIL";
}

class Assertions {
public:
    void add(const std::string& name, bool ok)
    {
        list_.push_back({{"name", name}, {"status", status(ok)}});
        passed_ = passed_ && ok;
    }
    Json json() const { return list_; }
    bool passed() const { return passed_; }

private:
    Json list_ = Json::array();
    bool passed_ = true;
};

std::string generator_label(const CohomologyGroup& g, std::size_t j)
{
    if (g.degree == 0 && g.rank() == 1)
        return "1";
    std::string base = "g" + std::to_string(g.degree);
    if (g.rank() == 1)
        return base;
    return base + "_" + std::to_string(j + 1);
}

std::string group_text(const CohomologyGroup& g)
{
    std::vector<std::string> parts;
    if (g.free_rank == 1)
        parts.push_back("Z");
    else if (g.free_rank > 1)
        parts.push_back("Z^" + std::to_string(g.free_rank));
    for (auto t : g.torsion)
        parts.push_back("Z/" + std::to_string(t));
    if (parts.empty())
        return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " + " + parts[i];
    return out;
}

Json complex_json(const Space& space)
{
    Json fv = Json::array();
    for (int k = 0; k <= space.dimension(); ++k)
        fv.push_back(space.index().count(k));
    return {{"name", space.complex().name},
            {"hash", content_hash(space.complex())},
            {"dimension", space.dimension()},
            {"f_vector", fv}};
}

std::vector<Ring> report_rings(int n_max)
{
    std::vector<Ring> rings{Ring::integers()};
    for (int n = 1; n <= n_max; ++n)
        rings.push_back(Ring::mod(std::int64_t{1} << n));
    return rings;
}

Json cohomology_section(const Space& space, int n_max)
{
    Json out = Json::object();
    for (const auto& ring : report_rings(n_max)) {
        Json groups = Json::array();
        for (int k = 0; k <= space.dimension(); ++k) {
            const auto& g = space.cohomology(ring, k);
            groups.push_back({{"degree", k}, {"group", group_text(g)}, {"free_rank", g.free_rank}, {"torsion", g.torsion}});
        }
        out[ring.name()] = groups;
    }
    return out;
}

Json steenrod_section(const Space& space)
{
    const Ring z2 = Ring::mod(2);
    Json rows = Json::array();
    for (int k = 0; k <= space.dimension(); ++k) {
        const auto& g = space.cohomology(z2, k);
        for (std::size_t j = 0; j < g.rank(); ++j) {
            std::vector<std::int64_t> e(g.rank(), 0);
            e[j] = 1;
            const auto x = class_from_coords(space, z2, k, e);
            Json squares = Json::object();
            for (int i = 1; i <= k && k + i <= space.dimension(); ++i)
                squares["Sq" + std::to_string(i)] = label(sq(space, i, x), space);
            rows.push_back({{"class", generator_label(g, j)}, {"degree", k}, {"squares", squares}});
        }
    }
    return rows;
}

int max_two_exponent(const Space& space)
{
    int e = 0;
    for (int k = 0; k <= space.dimension() + 1; ++k)
        for (auto t : space.cohomology(Ring::integers(), k).torsion)
            e = std::max(e, __builtin_ctzll(static_cast<unsigned long long>(t)));
    return e;
}

Json bss_section(const Space& space, int n_max, Assertions& asserts)
{
    Json out = Json::array();
    const int e = max_two_exponent(space);
    for (int n = 1; n <= n_max; ++n) {
        // d_r vanishes once n(r - 1) reaches the largest 2-power torsion.
        const int last = (e + n - 1) / n + 1;
        Json pages = Json::array();
        bool consistent = true;
        for (int r = 1; r <= last; ++r) {
            const auto page = bss_page(space, n, r);
            Json len = Json::array(), dl = Json::array();
            for (const auto& piece : page.pieces) {
                len.push_back(piece.length);
                dl.push_back(piece.image_length);
            }
            pages.push_back({{"r", r}, {"page_order_log2", len}, {"differential_order_log2", dl}});
            consistent = consistent && check_bss_page(space, n, r).empty();
        }
        asserts.add("bss pages consistent, n=" + std::to_string(n), consistent);
        out.push_back({{"n", n}, {"pages", pages}});
    }
    return out;
}

Json int_matrix(const std::vector<std::vector<std::int64_t>>& m)
{
    Json out = Json::array();
    for (const auto& row : m)
        out.push_back(row);
    return out;
}

Json fraction_matrix(const std::vector<std::vector<DyadicFraction>>& m)
{
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& f : row)
            r.push_back(f.str());
        out.push_back(r);
    }
    return out;
}

Json pairing_json(const PairingMatrix& p, const Space& space)
{
    Json basis = Json::array();
    for (const auto& b : p.basis)
        basis.push_back(label(b, space));
    Json out = {{"n", p.n}, {"degree", p.degree}, {"basis", basis}, {"orders", p.basis_orders}};
    out["gram"] = p.fractions.empty() ? int_matrix(p.gram) : fraction_matrix(p.fractions);
    out["skew"] = p.skew;
    out["symmetric"] = p.symmetric;
    out["alternating"] = p.alternating;
    return out;
}

Json pairing_section(const Space& space, int n_max, Assertions& asserts)
{
    const int dim = space.dimension();
    if (dim % 2 == 0)
        throw ParityError("pairing needs odd dimension, got " + std::to_string(dim));
    Json out = Json::object();
    const auto classical = classical_linking_form(space);
    const bool nondegenerate = linking_nondegenerate(classical);
    asserts.add("linking form nondegenerate", nondegenerate);
    if (dim % 4 == 3) {
        out["linking_form"] = pairing_json(classical, space);
        out["nondegenerate"] = nondegenerate;
        out["verdict"] = "ABSTAIN";
        return out;
    }
    Json aux = Json::array(), transported = Json::array();
    for (int n = 1; n <= n_max; ++n) {
        const auto a = aux_pairing(space, n);
        asserts.add("auxiliary pairing skew-symmetric, n=" + std::to_string(n), a.skew);
        aux.push_back(pairing_json(a, space));
        const auto lk = linking_form(space, n);
        if (a.alternating)
            asserts.add("alternating pairing gives alternating linking form, n=" + std::to_string(n), lk.alternating);
        transported.push_back(pairing_json(lk, space));
    }
    out["auxiliary"] = aux;
    out["linking_transported"] = transported;
    out["linking_form"] = pairing_json(classical, space);
    out["nondegenerate"] = nondegenerate;
    return out;
}

Json wu_section(const Space& space, int n_max, Assertions& asserts)
{
    const auto wu = wu_classes(space);
    const auto w = sw_from_wu(space, wu);
    auto total = [&](const std::vector<CohomologyClass>& cs) {
        std::string s;
        for (const auto& c : cs) {
            if (is_zero(c))
                continue;
            s += (s.empty() ? "" : " + ") + label(c, space);
        }
        return s.empty() ? std::string("0") : s;
    };
    Json vs = Json::array(), ws = Json::array();
    for (const auto& v : wu.v)
        vs.push_back(label(v, space));
    for (const auto& c : w)
        ws.push_back(label(c, space));
    Json out = {{"v", total(wu.v)}, {"v_components", vs}, {"w", total(w)}, {"w_components", ws}};
    const int dim = space.dimension();
    if (dim >= 1)
        asserts.add("v1 = w1", same_class(wu.v[1], w[1]));
    if (dim >= 2)
        asserts.add("v2 = w2 + w1^2", same_class(wu.v[2], add(space, w[2], cup(space, w[1], w[1]))));
    if (dim % 2 == 1) {
        const auto obs = wu_lift_obstruction(space, wu, n_max);
        Json finite = Json::array();
        for (const auto& b : obs.beta_2n)
            finite.push_back(label(b, space));
        out["lift"] = {{"degree", obs.degree},
                       {"v", label(obs.v, space)},
                       {"beta_tilde", label(obs.beta_tilde, space)},
                       {"beta_2n", finite},
                       {"lifts", obs.lifts}};
    }
    return out;
}

Json verdict_json(const Theorem73Record& rec)
{
    Json levels = Json::array();
    for (const auto& l : rec.levels) {
        Json ids = Json::object();
        for (const auto& [name, ok] : l.identities)
            ids[name] = ok;
        levels.push_back({{"n", l.n},
                          {"alternating", l.alternating},
                          {"skew", l.skew},
                          {"obstruction_vanishes", l.obstruction_vanishes},
                          {"samples", l.samples},
                          {"identities", ids}});
    }
    return {{"dimension", rec.dimension},
            {"n_max", rec.n_max},
            {"levels", levels},
            {"alternating", rec.all_alternating},
            {"lifts", rec.lifts},
            {"linking_alternating", rec.linking_alternating},
            {"n_max_covers_torsion", rec.n_max_covers_torsion},
            {"verdict", rec.consistent ? "CONSISTENT" : "INCONSISTENT"},
            {"failures", rec.failures}};
}

Json verdict_section(const Space& space, int n_max, Assertions& asserts)
{
    const int dim = space.dimension();
    if (dim % 2 == 0)
        throw ParityError("verdict needs odd dimension, got " + std::to_string(dim));
    if (dim % 4 == 3)
        return {{"dimension", dim}, {"verdict", "ABSTAIN"}};
    const auto rec = theorem73_verdict(space, n_max);
    asserts.add("verdict consistent", rec.consistent);
    asserts.add("identity chain holds", rec.failures.empty());
    return verdict_json(rec);
}

Json header(const Space& space)
{
    return {{"tool", "linkform"}, {"version", tool_version}, {"complex", complex_json(space)}};
}

} // namespace

const std::vector<std::string>& section_names()
{
    static const std::vector<std::string> names{"cohomology", "steenrod", "bss", "pairing", "wu", "verdict"};
    return names;
}

std::string label(const CohomologyClass& x, const Space& space)
{
    const auto& g = space.cohomology(x.ring, x.degree);
    std::string out;
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        std::int64_t c = x.coords[j];
        const std::int64_t t = g.order(j);
        if (t != 0)
            c = mod_floor(c, t);
        if (c == 0)
            continue;
        std::string term = generator_label(g, j);
        if (c == -1)
            term = "-" + term;
        else if (c != 1)
            term = std::to_string(c) + "*" + term;
        out += (out.empty() ? "" : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

Outcome build_report(const Space& space, const ReportOptions& opt)
{
    std::vector<std::string> sections = opt.sections;
    const int dim = space.dimension();
    if (sections.empty()) {
        sections = {"cohomology", "steenrod", "bss"};
        if (dim % 2 == 1)
            sections.insert(sections.end(), {"pairing", "wu", "verdict"});
        else
            sections.push_back("wu");
    }
    for (const auto& s : sections)
        if (std::find(section_names().begin(), section_names().end(), s) == section_names().end())
            throw ValidationError("unknown section '" + s + "'");

    Outcome out;
    out.doc = header(space);
    Assertions asserts;
    Json body = Json::object();
    // Fixed order regardless of how sections were requested.
    for (const auto& name : section_names()) {
        if (std::find(sections.begin(), sections.end(), name) == sections.end())
            continue;
        if (name == "cohomology")
            body[name] = cohomology_section(space, opt.n_max);
        else if (name == "steenrod")
            body[name] = steenrod_section(space);
        else if (name == "bss")
            body[name] = bss_section(space, opt.n_max, asserts);
        else if (name == "pairing")
            body[name] = pairing_section(space, opt.n_max, asserts);
        else if (name == "wu")
            body[name] = wu_section(space, opt.n_max, asserts);
        else if (name == "verdict")
            body[name] = verdict_section(space, opt.n_max, asserts);
    }
    out.doc["sections"] = body;
    out.doc["assertions"] = asserts.json();
    out.passed = asserts.passed();
    out.doc["status"] = status(out.passed);
    return out;
}

Outcome build_verify(const Space& space, const std::string& suite, std::uint64_t seed, const SuiteOptions& opt)
{
    const auto results = run_suite(space, suite, seed, opt);
    Outcome out;
    out.doc = header(space);
    out.doc["suite"] = suite;
    out.doc["seed"] = seed;
    Json list = Json::array();
    for (const auto& r : results) {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            Json entry = {{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"status", status(c.passed())}};
            if (!c.passed())
                entry["counterexample"] = c.counterexample;
            checks.push_back(entry);
        }
        list.push_back({{"suite", r.suite},
                        {"checked", r.checked()},
                        {"failed", r.failed()},
                        {"status", status(r.passed())},
                        {"skipped", r.skipped},
                        {"checks", checks}});
        out.passed = out.passed && r.passed();
        if (!r.passed() && !out.doc.contains("first_counterexample")) {
            const auto* f = r.first_failure();
            out.doc["first_counterexample"] = r.suite + " / " + f->name + ": " + f->counterexample;
        }
    }
    out.doc["results"] = list;
    if ((suite == "theorem73" || suite == "all") && space.dimension() % 4 == 1) {
        const auto rec = theorem73_verdict(space, opt.n_max, opt.sample_cap);
        out.doc["record"] = {{"alternating", rec.all_alternating},
                             {"lifts", rec.lifts},
                             {"verdict", rec.consistent ? "CONSISTENT" : "INCONSISTENT"}};
    }
    out.doc["status"] = status(out.passed);
    return out;
}

} // namespace linkform::cli
