#include "turnover/serialization.hpp"

#include <cstdio>

#include "json.hpp"

namespace turnover {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* family_name(FamilyTag f) {
    switch (f) {
    case FamilyTag::hyperbolic: return "hyperbolic";
    case FamilyTag::slice: return "slice";
    case FamilyTag::diagonal: return "diagonal";
    case FamilyTag::isolated: return "isolated";
    case FamilyTag::custom: return "custom";
    }
    throw internal_error("family_name: bad tag");
}

FamilyTag family_from_name(const std::string& name) {
    if (name == "hyperbolic") return FamilyTag::hyperbolic;
    if (name == "slice") return FamilyTag::slice;
    if (name == "diagonal") return FamilyTag::diagonal;
    if (name == "isolated") return FamilyTag::isolated;
    if (name == "custom") return FamilyTag::custom;
    throw parse_error("unknown representation family: " + name);
}

ordered_json matrix_to_json(const SquareMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.size(); ++j) {
            Scalar e = m.at(i, j);
            if (e.is_exact())
                row.push_back(e.exact_value().str());
            else
                row.push_back(e.float_value());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SquareMatrix matrix_from_json(const ordered_json& rows, Backend backend) {
    if (!rows.is_array() || rows.empty()) throw parse_error("matrix: expected rows");
    int n = static_cast<int>(rows.size());
    if (backend == Backend::exact) {
        std::vector<QuadExt> entries;
        entries.reserve(static_cast<size_t>(n) * n);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n) throw parse_error("matrix: ragged rows");
            for (const auto& cell : row) {
                if (!cell.is_string())
                    throw parse_error("matrix: exact entries must be strings");
                entries.push_back(QuadExt::parse(cell.get<std::string>()));
            }
        }
        return SquareMatrix::from_exact(n, std::move(entries));
    }
    std::vector<double> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw parse_error("matrix: ragged rows");
        for (const auto& cell : row) {
            if (!cell.is_number()) throw parse_error("matrix: floating entries must be numbers");
            entries.push_back(cell.get<double>());
        }
    }
    return SquareMatrix::from_float(n, std::move(entries));
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string scalar_to_string(const Scalar& x) {
    return x.is_exact() ? x.exact_value().str() : format_double(x.float_value());
}

Scalar scalar_from_string(const std::string& text, Backend backend) {
    if (backend == Backend::exact) return Scalar::exact(QuadExt::parse(text));
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw parse_error("scalar: trailing characters in " + text);
        return Scalar::floating(v);
    } catch (const std::invalid_argument&) {
        throw parse_error("scalar: cannot parse " + text);
    } catch (const std::out_of_range&) {
        throw parse_error("scalar: out of range " + text);
    }
}

std::string representation_to_json(const Representation& rho, int indent) {
    ordered_json j;
    j["schema_version"] = "1";
    j["family"] = family_name(rho.family());
    j["backend"] = rho.backend() == Backend::exact ? "exact" : "floating";
    j["orders"] = {rho.presentation().n1, rho.presentation().n2, rho.presentation().n3};
    ordered_json params = ordered_json::array();
    for (const Scalar& p : rho.parameters()) params.push_back(scalar_to_string(p));
    j["parameters"] = std::move(params);
    j["image_a"] = matrix_to_json(rho.image_a());
    j["image_b"] = matrix_to_json(rho.image_b());
    return j.dump(indent);
}

Representation representation_from_json(const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw parse_error("representation: malformed JSON");
    try {
        std::string backend_name = j.at("backend").get<std::string>();
        if (backend_name != "exact" && backend_name != "floating")
            throw parse_error("representation: unknown backend " + backend_name);
        Backend backend = backend_name == "exact" ? Backend::exact : Backend::floating;
        auto orders = j.at("orders");
        TurnoverPresentation pres(orders.at(0).get<int>(), orders.at(1).get<int>(),
                                  orders.at(2).get<int>());
        SquareMatrix a = matrix_from_json(j.at("image_a"), backend);
        SquareMatrix b = matrix_from_json(j.at("image_b"), backend);
        FamilyTag family = family_from_name(j.value("family", "custom"));
        std::vector<Scalar> params;
        if (j.contains("parameters"))
            for (const auto& p : j["parameters"])
                params.push_back(scalar_from_string(p.get<std::string>(), backend));
        return Representation(pres, std::move(a), std::move(b), family, std::move(params));
    } catch (const ordered_json::exception& e) {
        throw parse_error(std::string("representation: ") + e.what());
    }
}

std::string cohomology_report_to_json(const CohomologyReport& report,
                                      const TurnoverPresentation& pres, int indent) {
    ordered_json j;
    j["schema_version"] = "1";
    j["orders"] = {pres.n1, pres.n2, pres.n3};
    j["module"] = module_name(report.module);
    j["module_dimension"] = module_dimension(report.module);
    j["cone_h0"] = report.cone_h0;
    j["h0"] = report.h0;
    j["z1"] = report.z1;
    j["b1"] = report.b1;
    j["h1"] = report.h1;
    j["euler"] = report.euler;
    j["duality_consistent"] = report.duality_consistent;
    return j.dump(indent);
}

std::string cusp_verdict_to_json(const CuspVerdict& verdict, int indent) {
    ordered_json j;
    j["schema_version"] = "1";
    j["kind"] = end_kind_name(verdict.kind);
    ordered_json spectrum = ordered_json::array();
    for (const auto& root : verdict.spectrum)
        spectrum.push_back({{"re", root.real()}, {"im", root.imag()}});
    j["spectrum"] = std::move(spectrum);
    j["eigenvalue_product"] = verdict.eigenvalue_product;
    j["unipotency"] = verdict.unipotency;
    j["near_degenerate"] = verdict.near_degenerate;
    ordered_json frame = ordered_json::array();
    for (const auto& pair : verdict.eigenframe)
        frame.push_back({{"value", pair.value}, {"vector", pair.vector}});
    j["eigenframe"] = std::move(frame);
    j["detail"] = verdict.detail;
    return j.dump(indent);
}

std::string frame_report_to_json(const FrameReport& report, int indent) {
    ordered_json j;
    j["schema_version"] = "1";
    j["t"] = report.frame.t;
    j["theta"] = report.frame.theta;
    ordered_json points = ordered_json::array();
    for (const auto& p : report.frame.points) points.push_back(p);
    j["frame_points"] = std::move(points);
    j["line_deviations"] = report.line_deviations;
    j["permutation_deviations"] = report.permutation_deviations;
    j["eigenspace_residuals"] = report.eigenspace_residuals;
    j["frame_determinant"] = report.frame_determinant;
    j["pass"] = report.pass;
    j["note"] = report.note;
    return j.dump(indent);
}

std::string isolated_enumeration_to_json(const IsolatedEnumeration& e, int indent) {
    ordered_json j;
    j["schema_version"] = "1";
    j["count"] = e.classes.size();
    j["expected_count"] = e.expected_count;
    j["count_matches"] = e.count_matches;
    j["on_surface_discarded"] = e.on_surface_discarded;
    j["case_tallies"] = e.case_tallies;
    ordered_json classes = ordered_json::array();
    for (const auto& cls : e.classes)
        classes.push_back({{"blocks", cls.blocks},
                           {"case_label", cls.case_label},
                           {"a2b_order", cls.a2b_order},
                           {"partner_index", cls.partner_index}});
    j["classes"] = std::move(classes);
    ordered_json evidence = ordered_json::array();
    for (const auto& ev : e.collision_evidence)
        evidence.push_back({{"pair", {ev.pair_indices.first, ev.pair_indices.second}},
                            {"space_dimension", ev.space_dimension},
                            {"reflection_conjugator_found", ev.reflection_conjugator_found},
                            {"positive_det_sample_found", ev.positive_det_sample_found},
                            {"samples", ev.samples}});
    j["collision_evidence"] = std::move(evidence);
    return j.dump(indent);
}

std::string surface_csv(const std::vector<SurfaceSample>& samples) {
    std::string out = "x1,x2,x3,canon_x1,canon_x2,canon_x3,r,s,tau,residual,component\n";
    for (const auto& sm : samples) {
        const Scalar* cells[10] = {&sm.triple[0],    &sm.triple[1],    &sm.triple[2],
                                   &sm.canonical[0], &sm.canonical[1], &sm.canonical[2],
                                   &sm.point.r,      &sm.point.s,      &sm.point.tau,
                                   &sm.point.residual};
        for (const Scalar* cell : cells) {
            out += scalar_to_string(*cell);
            out += ',';
        }
        out += component_name(sm.point.component);
        out += '\n';
    }
    return out;
}

} // namespace turnover
