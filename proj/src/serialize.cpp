#include "bclab/serialize.hpp"

namespace bclab {

Json to_json(const DirichletChar& chi) {
    return Json{{"modulus", chi.modulus()}, {"exponents", chi.exponents()}, {"conductor", chi.conductor()}, {"order", chi.order()}};
}

Json to_json(const TwistedChar& chi) {
    Json j = to_json(chi.chi);
    j["tau"] = chi.tau;
    return j;
}

Json to_json(const AbelianField& field) {
    return Json{{"modulus", field.modulus()},
                {"subgroup", field.subgroup().elements()},
                {"degree", field.degree()},
                {"conductor", field.conductor()}};
}

Json to_json(const GalHeckeChar& pi) {
    Json values = Json::object();
    const auto& h = pi.omega().subgroup();
    for (std::size_t i = 0; i < h.size(); ++i) values[std::to_string(h.elements()[i])] = pi.omega().values()[i];
    return Json{{"field", to_json(pi.field())}, {"root_order", pi.omega().root_order()}, {"omega", values}, {"tau", pi.tau()}};
}

Json to_json(const SplittingData& s) {
    return Json{{"p", s.p}, {"f_p", s.f}, {"g_p", s.g}, {"ramified", s.ramified}};
}

Json to_json(const TwistedPairSet& t, const RsConvolution& rs) {
    Json pairs = Json::array();
    for (const auto& p : t.pairs)
        pairs.push_back(Json{{"left_index", p.left},
                             {"right_index", p.right},
                             {"left", to_json(rs.left_fiber()[p.left])},
                             {"right", to_json(rs.right_fiber()[p.right])}});
    return Json{{"pairs", pairs}, {"size", t.size()}, {"tau0", t.tau0 ? Json(*t.tau0) : Json(nullptr)}};
}

Json to_json(const TheoremFlags& f) {
    return Json{{"thm1_1", f.thm1_1},
                {"thm1_2", f.thm1_2},
                {"self_contragredient_left", f.self_contragredient_left},
                {"self_contragredient_right", f.self_contragredient_right}};
}

Json to_json(const CountPrediction& c) {
    Json j{{"l", c.l}, {"lprime", c.l_prime}, {"gcd", c.gcd}};
    j["thm1_1"] = Json{{"applies", c.thm1_1_applies},
                       {"cuspidal_count", c.thm1_1_applies ? Json(c.thm1_1_cuspidal) : Json(nullptr)},
                       {"noncuspidal_count", c.thm1_1_noncuspidal ? Json(*c.thm1_1_noncuspidal) : Json(nullptr)}};
    j["thm1_2"] = Json{{"applies", c.thm1_2_applies}, {"count_if_nonempty", c.coprime ? Json(*c.coprime) : Json(nullptr)}};
    j["coprime_count"] = c.coprime ? Json(*c.coprime) : Json(nullptr);
    return j;
}

Json to_json(const PntReport& r) {
    Json cps = Json::array();
    for (const auto& c : r.checkpoints)
        cps.push_back(Json{{"x", c.x},
                           {"re_psi", c.psi.real()},
                           {"im_psi", c.psi.imag()},
                           {"re_pred", c.predicted.real()},
                           {"im_pred", c.predicted.imag()},
                           {"rel_error", c.rel_error}});
    return Json{{"multiplicity", r.multiplicity}, {"tau0", r.tau0}, {"checkpoints", cps}};
}

Json provenance(const std::string& config_hash) {
    return Json{{"artifact_version", std::string(kArtifactVersion)}, {"config_hash", config_hash}};
}

std::string csv_banner(const std::string& config_hash) {
    return "# " + std::string(kArtifactVersion) + " config_hash=" + config_hash;
}

} // namespace bclab
