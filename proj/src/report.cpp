#include "braidnorm/report.hpp"

namespace braidnorm {

namespace {

Json big_json(const BigInt& c) {
    if (c.fits_slong_p())
        return static_cast<std::int64_t>(c.get_si());
    return c.get_str();
}

Json euler_json(const EulerReport& e) {
    return Json{{"chi", e.chi}, {"chi_minus", e.chi_minus}, {"kind", to_string(e.kind)}};
}

} // namespace

Json poly_json(const LaurentVZ& p) {
    Json out = Json::array();
    for (const auto& t : canonical_terms(p))
        out.push_back(Json::array({big_json(t.coeff), t.v, t.z}));
    return out;
}

Json info_json(const BraidWord& word) {
    const ClosureProfile prof = closure_profile(word);
    const GeneratorProfile gp = generator_profile(word);
    Json comps = Json::array();
    Json rel = Json::array();
    Json punctured = Json::array();
    for (int c = 0; c < prof.r; ++c) {
        const auto k = static_cast<std::size_t>(c);
        comps.push_back(Json{{"id", c},
                             {"strands", prof.strands[k]},
                             {"n", prof.n_i[k]},
                             {"self_crossings", prof.l_u[k]},
                             {"over_crossings", prof.u[k]}});
        rel.push_back(relative_bennequin(prof, c));
        punctured.push_back(euler_json(punctured_component_euler(word, c)));
    }
    Json j;
    j["n"] = word.strands();
    j["word"] = to_string(word);
    j["components"] = comps;
    j["crossing_matrix"] = prof.cr;
    j["linking_matrix"] = linking_matrix(prof);
    j["bennequin"] = bennequin_number(word);
    j["relative_bennequin"] = rel;
    j["euler"] = Json{{"seifert", euler_json(seifert_euler(word))},
                      {"band_seifert", euler_json(band_seifert_euler(word))},
                      {"punctured_component", punctured}};
    j["generators"] = Json{{"pos", gp.pos},   {"neg", gp.neg}, {"pos_b", gp.pos_b},
                           {"neg_b", gp.neg_b}, {"n_n", gp.n_n}, {"n_p", gp.n_p}};
    j["homogeneous"] = gp.homogeneous;
    return j;
}

Json bracket_json(const NormBracket& b) {
    return Json{{"lower", b.lower},
                {"upper", b.upper},
                {"determined", b.determined},
                {"sources", Json{{"lower", to_string(b.lower_source)}, {"upper", to_string(b.upper_source)}}},
                {"corollary", b.corollary},
                {"scholium", b.scholium}};
}

Json mcmullen_json(const McMullenReport& m) {
    Json j{{"alexander_norm", big_json(m.alexander)}, {"bound", m.bound}, {"holds", m.holds}};
    j["gap"] = m.has_gap ? big_json(m.gap) : Json(nullptr);
    return j;
}

Json homfly_json(const HomflyReport& r) {
    return Json{{"P", poly_json(r.P)},
                {"H", poly_json(r.H)},
                {"e", r.e},
                {"e_P", r.e_P},
                {"conway", poly_json(r.conway)}};
}

Json cable_json(const CablePair& cp) {
    return Json{{"lprime", to_string(cp.lprime)},
                {"n", cp.lprime.strands()},
                {"subset", cp.subset},
                {"origin", cp.origin},
                {"p", cp.p},
                {"q", cp.q},
                {"m", cp.m},
                {"twist", cp.twist},
                {"relative_bennequin", relative_bennequin_subset(cp.lprime, cp.subset)},
                {"bennequin_sublink", bennequin_number(cp.lprime, cp.subset)}};
}

Json suite_json(const SuiteResult& r) {
    return Json{{"suite", r.suite},
                {"checked", r.checked},
                {"failures", r.failures},
                {"notes", r.notes},
                {"passed", r.passed()}};
}

} // namespace braidnorm
