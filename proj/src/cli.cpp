#include "bier/cli.hpp"

#include <functional>
#include <json.hpp>
#include <map>
#include <sstream>

#include "bier/error.hpp"
#include "bier/io.hpp"
#include "bier/polarization.hpp"

namespace bier {

using nlohmann::json;

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = {
        "ball",   "sphere",         "facets", "shelling", "vectors", "dual", "polarize", "generators-formula",
        "linkage-check", "edgedecomp", "betti", "verify-all"};
    return names;
}

Field parse_field(const std::string& text)
{
    if (text == "q" || text == "Q" || text == "QQ") return Field::rationals();
    if (text.rfind("p:", 0) == 0) {
        try {
            std::size_t used = 0;
            const auto p = std::stoul(text.substr(2), &used);
            if (used == text.size() - 2) return Field::modulo(static_cast<std::uint32_t>(p));
        }
        catch (const InvalidInput&) {
            throw;
        }
        catch (const std::exception&) {
        }
    }
    if (text == "p") return Field::modulo(kDefaultPrime);
    throw InvalidInput("field must be q or p:<prime>, got '" + text + "'");
}

SphereMethod parse_method(const std::string& text)
{
    if (text == "facet") return SphereMethod::facet_formula;
    if (text == "boundary") return SphereMethod::boundary;
    throw InvalidInput("method must be facet or boundary, got '" + text + "'");
}

VerifyMode parse_verify(const std::string& text)
{
    if (text == "on") return VerifyMode::on;
    if (text == "off") return VerifyMode::off;
    if (text == "auto") return VerifyMode::automatic;
    throw InvalidInput("verify must be on, off or auto, got '" + text + "'");
}

OutputFormat parse_format(const std::string& text)
{
    if (text == "text") return OutputFormat::text;
    if (text == "machine") return OutputFormat::machine;
    throw InvalidInput("output format must be text or machine, got '" + text + "'");
}

namespace {

struct Reply {
    std::string text;
    json data = json::object();
    bool failed = false;
};

json faces_json(const std::vector<Face>& faces)
{
    json out = json::array();
    for (const auto& f : faces) {
        json face = json::array();
        for (const auto& v : f) face.push_back(v.str());
        out.push_back(std::move(face));
    }
    return out;
}

json exponents_json(const std::vector<Exponent>& list)
{
    json out = json::array();
    for (const auto& a : list) out.push_back(a);
    return out;
}

std::string bier_facet_text(const BierFacet& f, const Cap& cap)
{
    Exponent power(f.base.size(), 0);
    power[f.var] = f.level;
    return "G(" + render_monomial(f.base) + "; " + render_monomial(power) + ")  " + render_face(f.vertices(cap));
}

const Multicomplex& need_multicomplex(const Input& in, const std::string& command)
{
    if (const auto* m = std::get_if<Multicomplex>(&in)) return *m;
    throw InvalidInput(command + " needs a multicomplex input (cap ... / members|generators)");
}

Cap ideal_cap(const JobSpec& job, const MonomialIdeal& ideal)
{
    if (job.cap) {
        if (job.cap->size() != ideal.nvars()) throw InvalidInput("--cap length differs from the variable count");
        return Cap(*job.cap);
    }
    std::vector<int> c(ideal.nvars(), 0);
    for (const auto& g : ideal.gens())
        for (std::size_t i = 0; i < g.size(); ++i) c[i] = std::max(c[i], g[i] - 1);
    return Cap(c);
}

std::string label_monomial(const std::vector<VertexLabel>& ground, const Exponent& sigma)
{
    Face f;
    for (std::size_t p = 0; p < sigma.size(); ++p)
        if (sigma[p]) f.push_back(ground[p]);
    return render_polarized(f);
}

void put_betti(Reply& r, const BettiTable& table, const std::function<std::string(const Exponent&)>& degree_text)
{
    r.text += "field " + table.field + "\n" + render_betti_table(table);
    json records = json::array();
    for (const auto& [key, value] : table.multigraded)
        records.push_back({{"i", key.first}, {"j", degree(key.second)}, {"degree", degree_text(key.second)}, {"dim", value}});
    json graded = json::array();
    for (const auto& [key, value] : table.graded) graded.push_back({{"i", key.first}, {"j", key.second}, {"dim", value}});
    r.data["field"] = table.field;
    r.data["totals"] = table.totals();
    r.data["graded"] = std::move(graded);
    r.data["multigraded"] = std::move(records);
}

// ---------------------------------------------------------------------------

Reply cmd_ball(const JobSpec&, const Input& in)
{
    const auto& m = need_multicomplex(in, "ball");
    const auto ball = bier_ball(m);
    return {render_complex(ball), {{"facets", faces_json(ball.facets())}}};
}

Reply cmd_sphere(const JobSpec& job, const Input& in)
{
    const auto& m = need_multicomplex(in, "sphere");
    const auto sphere = bier_sphere(m, job.method, job.verify);
    return {render_complex(sphere), {{"facets", faces_json(sphere.facets())}}};
}

Reply cmd_facets(const JobSpec&, const Input& in)
{
    Reply r;
    if (const auto* c = std::get_if<SimplicialComplex>(&in)) {
        r.text = render_complex(*c);
        r.data["facets"] = faces_json(c->facets());
        return r;
    }
    const auto& m = need_multicomplex(in, "facets");
    if (m.is_full()) throw Undefined("Bier sphere needs a proper multicomplex");
    json list = json::array();
    for (const auto& f : bier_facets(m)) {
        r.text += bier_facet_text(f, m.cap()) + "\n";
        list.push_back({{"base", f.base}, {"var", f.var + 1}, {"level", f.level}, {"vertices", faces_json({f.vertices(m.cap())})[0]}});
    }
    r.data["facets"] = std::move(list);
    return r;
}

Reply cmd_shelling(const JobSpec&, const Input& in)
{
    const auto& m = need_multicomplex(in, "shelling");
    const auto order = shelling_order(m);
    std::vector<Face> faces;
    for (const auto& f : order) faces.push_back(f.vertices(m.cap()));
    const auto check = verify_shelling(bier_sphere(m), faces);
    Reply r;
    json steps = json::array();
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int ridges = k < check.ridge_counts.size() ? check.ridge_counts[k] : -1;
        r.text += std::to_string(k + 1) + "  " + bier_facet_text(order[k], m.cap()) + "  ridges=" + std::to_string(ridges) + "\n";
        steps.push_back({{"vertices", faces_json({faces[k]})[0]}, {"ridges", ridges}});
    }
    r.text += check.valid ? "shelling valid, h=" + render_vector(check.h) + "\n" : "not a shelling\n";
    r.data["steps"] = std::move(steps);
    r.data["valid"] = check.valid;
    r.data["h"] = check.h;
    r.failed = !check.valid;
    return r;
}

Reply cmd_vectors(const JobSpec&, const Input& in)
{
    Reply r;
    if (const auto* c = std::get_if<SimplicialComplex>(&in)) {
        const auto v = face_vectors(*c);
        r.text = "f " + render_vector(v.f) + "\nh " + render_vector(v.h) + "\ng " + render_vector(v.g) + "\n";
        r.data = {{"f", v.f}, {"h", v.h}, {"g", v.g}};
        return r;
    }
    const auto& m = need_multicomplex(in, "vectors");
    const auto formulas = theorem_hvector(m);
    r.text = "f(M) " + render_vector(f_vector(m)) + "\nh(ball) " + render_vector(formulas.ball_h) + "\n";
    r.data = {{"f_M", f_vector(m)}, {"h_ball", formulas.ball_h}};
    if (m.is_proper()) {
        const auto v = face_vectors(bier_sphere(m));
        const bool o_seq = is_o_sequence(formulas.sphere_g);
        r.text += "f(sphere) " + render_vector(v.f) + "\nh(sphere) " + render_vector(v.h) + "\ng(sphere) " +
                  render_vector(formulas.sphere_g) + (o_seq ? "  O-sequence\n" : "  not an O-sequence\n");
        r.data["f_sphere"] = v.f;
        r.data["h_sphere"] = v.h;
        r.data["g_sphere"] = formulas.sphere_g;
        r.data["o_sequence"] = o_seq;
        r.failed = !o_seq;
    }
    return r;
}

Reply cmd_dual(const JobSpec& job, const Input& in)
{
    Reply r;
    if (const auto* ideal = std::get_if<MonomialIdeal>(&in)) {
        const auto d = ideal_alexander_dual(*ideal, ideal_cap(job, *ideal));
        r.text = render_ideal(d) + "\n";
        r.data["generators"] = exponents_json(d.gens());
        return r;
    }
    if (const auto* c = std::get_if<SimplicialComplex>(&in)) {
        const auto d = alexander_dual_complex(*c, c->vertices());
        r.text = render_complex(d);
        r.data["facets"] = faces_json(d.facets());
        return r;
    }
    const auto& m = need_multicomplex(in, "dual");
    const auto d = alexander_dual(m);
    const bool iso = dual_iso_check(m);
    r.text = "members " + render_members(d) + "\nI_c(M) " + render_ideal(complement_ideal(m, Capping::capped)) +
             "\nI_c(M^v) " + render_ideal(complement_ideal(d, Capping::capped)) + "\nBier spheres related by x_i^(j) -> x_i^(c_i-j): " +
             (iso ? "yes" : "no") + "\n";
    r.data = {{"members", exponents_json(d.members())}, {"iso", iso}};
    r.failed = !iso;
    return r;
}

Reply cmd_polarize(const JobSpec& job, const Input& in)
{
    Reply r;
    if (const auto* ideal = std::get_if<MonomialIdeal>(&in)) {
        const Cap c = ideal_cap(job, *ideal);
        const auto pol = polarize_ideal(*ideal, c, Polarization::prefix);
        const auto dual = polarize_ideal(*ideal, c, Polarization::suffix);
        r.text = "pol  " + render_polarized(pol.generators()) + "\npol* " + render_polarized(dual.generators()) + "\n";
        r.data = {{"pol", faces_json(pol.generators())}, {"pol_star", faces_json(dual.generators())}};
        return r;
    }
    const auto& m = need_multicomplex(in, "polarize");
    const auto ideal = complement_ideal(m, Capping::uncapped);
    const auto pol = polarize_ideal(ideal, m.cap(), Polarization::prefix);
    const bool ok = verify_jahan(m);
    r.text = "I(M) " + render_ideal(ideal) + "\npol(I(M)) " + render_polarized(pol.generators()) +
             "\nequals the Stanley-Reisner ideal of the ball: " + (ok ? "yes" : "no") + "\n";
    r.data = {{"pol", faces_json(pol.generators())}, {"jahan", ok}};
    r.failed = !ok;
    return r;
}

Reply cmd_generators(const JobSpec&, const Input& in)
{
    const auto& m = need_multicomplex(in, "generators-formula");
    const auto g = generator_formula(m);
    const bool ok = verify_generator_formula(m);
    const auto redundant = g.redundant();
    Reply r;
    r.text = "pol(I_c(M))     " + render_polarized(g.ideal_part) + "\npol*(I_c(M^v))  " + render_polarized(g.dual_part) +
             "\npol(P)          " + render_polarized(g.power_part) + "\nminimal         " +
             render_polarized(g.ideal.generators()) + "\nredundant       " +
             (redundant.empty() ? std::string("none") : render_polarized(redundant)) +
             "\nequals the Stanley-Reisner ideal of the sphere: " + (ok ? "yes" : "no") + "\n";
    r.data = {{"ideal_part", faces_json(g.ideal_part)}, {"dual_part", faces_json(g.dual_part)},
              {"power_part", faces_json(g.power_part)}, {"minimal", faces_json(g.ideal.generators())},
              {"redundant", faces_json(redundant)}, {"verified", ok}};
    r.failed = !ok;
    return r;
}

Reply cmd_linkage(const JobSpec& job, const Input& in)
{
    MonomialIdeal ideal;
    Cap cap;
    if (const auto* i = std::get_if<MonomialIdeal>(&in)) {
        ideal = *i;
        cap = ideal_cap(job, *i);
    }
    else {
        const auto& m = need_multicomplex(in, "linkage-check");
        ideal = complement_ideal(m, Capping::capped);
        cap = m.cap();
    }
    const auto check = linkage_identities(ideal, cap);
    Reply r;
    r.text = "I " + render_ideal(ideal) + "\nP:(I+P) " + render_ideal(check.colon_ideal) +
             "\nP:(I+P) = I^v+P: " + (check.monomial ? "yes" : "no") +
             "\npol(P):pol(I+P) = pol*(I^v+P): " + (check.polarized ? "yes" : "no") + "\n";
    r.data = {{"monomial", check.monomial}, {"polarized", check.polarized}, {"colon", exponents_json(check.colon_ideal.gens())}};
    r.failed = !(check.monomial && check.polarized);
    return r;
}

Reply cmd_edgedecomp(const JobSpec& job, const Input& in)
{
    Reply r;
    if (const auto* c = std::get_if<SimplicialComplex>(&in)) {
        const auto found = is_edge_decomposable(*c, job.budget);
        const std::string word = found.outcome == Outcome::yes ? "yes" : found.outcome == Outcome::no ? "no" : "unknown";
        r.text = "edge decomposable: " + word + " (" + std::to_string(found.steps) + " steps)\n";
        r.data = {{"outcome", word}, {"steps", found.steps}};
        if (found.certificate) {
            const auto report = verify_certificate(*found.certificate);
            r.text += certificate_text(*found.certificate);
            r.data["certificate"] = json::parse(certificate_json(*found.certificate));
            r.data["verified"] = report.ok;
            r.failed = !report.ok;
        }
        return r;
    }
    const auto& m = need_multicomplex(in, "edgedecomp");
    const auto cert = bier_decomposition(m, job.budget);
    const auto report = verify_certificate(cert);
    r.text = certificate_text(cert) + "verified: " + (report.ok ? "yes" : "no, " + report.failure) + " (" +
             std::to_string(report.nodes) + " nodes, " + std::to_string(report.edge_steps) + " edge steps)\n";
    r.data = {{"certificate", json::parse(certificate_json(cert))}, {"verified", report.ok}, {"failure", report.failure}};
    r.failed = !report.ok;
    return r;
}

Reply cmd_betti(const JobSpec& job, const Input& in)
{
    Reply r;
    if (const auto* ideal = std::get_if<MonomialIdeal>(&in)) {
        put_betti(r, betti_table(*ideal, job.field), render_monomial);
        return r;
    }
    if (const auto* c = std::get_if<SimplicialComplex>(&in)) {
        const auto ground = c->vertices();
        put_betti(r, hochster_betti(*c, ground, job.field), [&](const Exponent& s) { return label_monomial(ground, s); });
        return r;
    }
    const auto& m = need_multicomplex(in, "betti");
    const auto ground = level_vertices(m.cap());
    const auto table = hochster_betti(bier_sphere(m, job.method, job.verify), ground, job.field);
    put_betti(r, table, [&](const Exponent& s) { return label_monomial(ground, s); });
    const bool symmetric = is_betti_symmetric(table);
    r.text += std::string("symmetric: ") + (symmetric ? "yes" : "no") + "\n";
    r.data["symmetric"] = symmetric;
    r.failed = !symmetric;
    if (lcm_of(m) != m.cap().entries()) {
        const bool ok = verify_bier_betti(m, job.field);
        r.text += std::string("sum of the tables of S/I(M) and its shifted transpose: ") + (ok ? "yes" : "no") + "\n";
        r.data["sum_formula"] = ok;
        r.failed = r.failed || !ok;
    }
    else {
        r.text += "sum formula not applicable: lcm(M) = x^c\n";
    }
    return r;
}

struct Tally {
    std::map<std::string, std::pair<int, int>> counts;  // passed, failed
    std::vector<std::string> failures;

    void record(const std::string& check, bool ok, const std::string& where)
    {
        auto& [pass, fail] = counts[check];
        (ok ? pass : fail) += 1;
        if (!ok && failures.size() < 20) failures.push_back(check + " at " + where);
    }
};

void check_all(const Multicomplex& m, Tally& t, bool with_betti, std::uint64_t budget)
{
    const std::string where = "c=" + render_vector({m.cap().entries().begin(), m.cap().entries().end()}) + " M={" +
                              render_members(m) + "}";
    auto guard = [&](const std::string& check, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        }
        catch (const std::exception&) {
            ok = false;
        }
        t.record(check, ok, where);
    };
    guard("sphere methods agree", [&] {
        return bier_sphere(m, SphereMethod::facet_formula, VerifyMode::off) ==
               bier_sphere(m, SphereMethod::boundary, VerifyMode::off);
    });
    guard("h and g formulas", [&] {
        theorem_hvector(m);
        return true;
    });
    guard("Dehn-Sommerville", [&] {
        const auto h = face_vectors(bier_sphere(m)).h;
        return std::equal(h.begin(), h.end(), h.rbegin());
    });
    guard("g is an O-sequence", [&] { return is_o_sequence(theorem_hvector(m).sphere_g); });
    guard("dual permutation", [&] { return dual_iso_check(m); });
    guard("ball ideal is pol(I(M))", [&] { return verify_jahan(m); });
    guard("generator formula", [&] { return verify_generator_formula(m); });
    guard("linkage identities", [&] {
        const auto c = linkage_identities(complement_ideal(m, Capping::capped), m.cap());
        return c.monomial && c.polarized;
    });
    guard("shelling order", [&] {
        std::vector<Face> faces;
        for (const auto& f : shelling_order(m)) faces.push_back(f.vertices(m.cap()));
        return verify_shelling(bier_sphere(m), faces).valid;
    });
    guard("edge decomposition", [&] { return verify_certificate(bier_decomposition(m, budget)).ok; });
    if (with_betti)
        guard("Betti symmetry", [&] {
            return is_betti_symmetric(hochster_betti(bier_sphere(m), level_vertices(m.cap())));
        });
}

Reply cmd_verify_all(const JobSpec& job, const Input&)
{
    if (job.n < 1 || job.cmax < 1) throw InvalidInput("verify-all needs --n >= 1 and --cmax >= 1");
    Tally t;
    int complexes = 0;
    std::vector<int> c(static_cast<std::size_t>(job.n), 1);
    while (true) {
        const Cap cap(c);
        const bool with_betti = level_vertices(cap).size() <= 12;
        for_each_multicomplex(cap, [&](const Multicomplex& m) {
            if (m.is_full()) return;
            ++complexes;
            check_all(m, t, with_betti, job.budget);
        });
        std::size_t k = 0;
        while (k < c.size() && c[k] == job.cmax) c[k++] = 1;
        if (k == c.size()) break;
        ++c[k];
    }
    Reply r;
    r.text = std::to_string(complexes) + " proper multicomplexes\n";
    json checks = json::object();
    for (const auto& [name, count] : t.counts) {
        r.text += name + ": " + std::to_string(count.first) + " passed, " + std::to_string(count.second) + " failed\n";
        checks[name] = {{"passed", count.first}, {"failed", count.second}};
        r.failed = r.failed || count.second > 0;
    }
    for (const auto& f : t.failures) r.text += "FAILED " + f + "\n";
    r.data = {{"multicomplexes", complexes}, {"checks", checks}, {"failures", t.failures}};
    return r;
}

}  // namespace

JobResult run(const JobSpec& job)
{
    static const std::map<std::string, std::function<Reply(const JobSpec&, const Input&)>> table = {
        {"ball", cmd_ball},
        {"sphere", cmd_sphere},
        {"facets", cmd_facets},
        {"shelling", cmd_shelling},
        {"vectors", cmd_vectors},
        {"dual", cmd_dual},
        {"polarize", cmd_polarize},
        {"generators-formula", cmd_generators},
        {"linkage-check", cmd_linkage},
        {"edgedecomp", cmd_edgedecomp},
        {"betti", cmd_betti},
        {"verify-all", cmd_verify_all},
    };
    JobResult result;
    const auto it = table.find(job.command);
    if (it == table.end()) {
        result.exit_code = 2;
        result.error = "unknown command '" + job.command + "'";
        return result;
    }
    try {
        const Input input = job.command == "verify-all" ? Input{SimplicialComplex::void_complex()} : parse_input(job.input);
        auto reply = it->second(job, input);
        if (job.out == OutputFormat::machine) {
            reply.data["command"] = job.command;
            reply.data["ok"] = !reply.failed;
            result.output = reply.data.dump(2) + "\n";
        }
        else {
            result.output = std::move(reply.text);
        }
        result.exit_code = reply.failed ? 1 : 0;
    }
    catch (const VerificationFailure& e) {
        result.exit_code = 1;
        result.error = std::string("verification failed: ") + e.what();
    }
    catch (const std::exception& e) {
        result.exit_code = 2;
        result.error = e.what();
    }
    return result;
}

}  // namespace bier
