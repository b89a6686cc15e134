// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/io/report.hpp"

#include "tafnoise/errors.hpp"

#include <fstream>

namespace tafnoise::io {

namespace {

Json array_json(const Eigen::ArrayXd& a)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.push_back(a[i]);
    return out;
}

}  // namespace

Json to_json(const FitReport& rep)
{
    Json params = Json::object();
    for (const auto& p : rep.parameters)
        params[p.name] = {{"value", p.value}, {"error", p.error}};
    return Json{{"model", rep.model_name},
                {"parameters", params},
                {"statistics",
                 {{"chi2", rep.chi2},
                  {"chi2_reduced", rep.chi2_reduced},
                  {"p_value", rep.p_value},
                  {"dof", rep.dof}}},
                {"residuals", array_json(rep.residuals)}};
}

Json to_json(const AlphaEstimate& est)
{
    return Json{{"alpha", est.alpha},
                {"alpha_err", est.alpha_err},
                {"temperature_K", est.temperature_K},
                {"omega_low_rad_per_s", est.omega_low_rad_per_s},
                {"omega_high_rad_per_s", est.omega_high_rad_per_s}};
}

Json to_json(const CorrectionReport& rep)
{
    return Json{{"iterations", rep.iterations},
                {"converged", rep.converged},
                {"max_abs_residual", rep.max_abs_residual},
                {"temperatures_K", array_json(rep.temperatures_K)},
                {"pre_correction_residual", array_json(rep.pre_residual)},
                {"post_correction_residual", array_json(rep.post_residual)}};
}

Json to_json(const ModelValue& v)
{
    return Json{{"value", v.value}, {"valid", v.valid}, {"note", v.note}};
}

Json to_json(const TTestResult& r)
{
    return Json{{"t", r.t},
                {"mean_delta", r.mean_delta},
                {"mean_delta_err", r.mean_delta_err},
                {"weighted_std", r.weighted_std},
                {"confidence_two_sided", r.confidence_two_sided},
                {"n", r.n}};
}

std::string report_document(const std::string& command, Json config,
                            Json payload)
{
    Json doc;
    doc["schema_version"] = report_schema_version;
    doc["command"] = command;
    doc["config"] = std::move(config);
    doc["result"] = std::move(payload);
    return doc.dump(2) + "\n";
}

void write_report(const std::string& path, const std::string& command,
                  Json config, Json payload)
{
    const std::string body =
        report_document(command, std::move(config), std::move(payload));
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw InvalidInputError("cannot open '" + path + "' for writing");
    out << body;
    if (!out)
        throw InvalidInputError("failed writing '" + path + "'");
}

}  // namespace tafnoise::io
