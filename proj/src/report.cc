#include "alcl/report.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace alcl {
namespace {

using nlohmann::json;

json VerdictToJson(const Verdict& v) {
  json j = {{"name", v.name},
            {"tolerance_name", v.tolerance_name},
            {"tolerance", v.tolerance},
            {"measured", v.measured},
            {"evaluated", v.evaluated},
            {"pass", v.evaluated && v.pass}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json BlockToJson(const RunBlock& b) {
  json j = {{"h", b.h}, {"status", b.status}};
  if (b.status != "ok") {
    j["error"] = b.error;
    return j;
  }
  json drifts = json::array();
  for (const DriftReport& d : b.drifts) {
    drifts.push_back({{"name", d.name},
                      {"max_abs_drift", d.max_abs_drift},
                      {"max_rel_drift", d.max_rel_drift},
                      {"times", d.times},
                      {"values", d.values}});
  }
  json profiles = json::array();
  for (const NormProfile& p : b.profiles) {
    profiles.push_back({{"label", p.label}, {"parameter", p.parameter}, {"sup", p.sup()}});
  }
  json verdicts = json::array();
  for (const Verdict& v : b.verdicts) verdicts.push_back(VerdictToJson(v));
  const double n0 = b.norm0 > 0.0 ? b.norm0 : 1.0;
  j.update({{"sites", b.sites},
            {"N", b.cutoff},
            {"dt_lat", b.dt_lat},
            {"steps_per_direction", b.steps},
            {"dt_halvings", b.dt_halvings},
            {"kappa0", b.kappa0},
            {"norm0", b.norm0},
            {"drifts", drifts},
            {"boundary_mass", b.boundary_mass},
            {"strichartz",
             {{"l6l6", b.strichartz_l6},
              {"l4linf", b.strichartz_l4inf},
              {"l6l6_normalized", b.strichartz_l6 / n0},
              {"l4linf_normalized", b.strichartz_l4inf / n0}}},
            {"cross_term", {{"psi", b.cross_psi}, {"phi", b.cross_phi}}},
            {"sign_flip", b.sign_flip},
            {"convergence", {{"psi", b.errors.psi}, {"phi", b.errors.phi}}},
            {"channel_max", {{"psi", b.psi_channel_max}, {"phi", b.phi_channel_max}}},
            {"profiles", profiles},
            {"verdicts", verdicts},
            {"notes", b.notes}});
  return j;
}

std::ofstream OpenOut(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

std::string FormatNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json RecordToJson(const RunRecord& record) {
  json blocks = json::array();
  for (const RunBlock& b : record.blocks) blocks.push_back(BlockToJson(b));
  json verdicts = json::array();
  for (const Verdict& v : record.verdicts) verdicts.push_back(VerdictToJson(v));
  const Reference& r = record.reference;
  return {{"config", ConfigToJson(record.config)},
          {"partial", record.partial},
          {"reference",
           {{"points", r.points},
            {"dx", r.dx},
            {"dt", r.dt},
            {"duhamel_residual_psi", r.duhamel_psi},
            {"duhamel_residual_phi", r.duhamel_phi}}},
          {"blocks", blocks},
          {"verdicts", verdicts}};
}

void EmitReports(const RunRecord& record, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) throw std::runtime_error("cannot create " + out_dir);
  const fs::path dir(out_dir);

  {
    std::ofstream out = OpenOut(dir / "record.json");
    out << RecordToJson(record).dump(2) << '\n';
  }

  std::vector<const RunBlock*> ok;
  for (const RunBlock& b : record.blocks) {
    if (b.status == "ok") ok.push_back(&b);
  }
  {
    std::ofstream out = OpenOut(dir / "convergence.csv");
    out << "h,err_psi,err_phi,order_psi,order_phi\n";
    const auto order = [](double a, double b) {
      return a > 0.0 && b > 0.0 ? FormatNumber(std::log2(a / b)) : std::string();
    };
    for (std::size_t j = 0; j < ok.size(); ++j) {
      const RunBlock& b = *ok[j];
      out << FormatNumber(b.h) << ',' << FormatNumber(b.errors.psi) << ','
          << FormatNumber(b.errors.phi) << ',';
      if (j + 1 < ok.size()) {
        out << order(b.errors.psi, ok[j + 1]->errors.psi) << ','
            << order(b.errors.phi, ok[j + 1]->errors.phi);
      } else {
        out << ',';
      }
      out << '\n';
    }
  }
  {
    std::ofstream out = OpenOut(dir / "conserved.csv");
    out << "h,functional,max_rel_drift\n";
    for (const RunBlock* b : ok) {
      for (const DriftReport& d : b->drifts) {
        out << FormatNumber(b->h) << ',' << d.name << ',' << FormatNumber(d.max_rel_drift) << '\n';
      }
    }
  }
  {
    std::ofstream out = OpenOut(dir / "profiles.csv");
    out << "h,profile,parameter,t,value\n";
    for (const RunBlock* b : ok) {
      for (const NormProfile& p : b->profiles) {
        for (std::size_t i = 0; i < p.values.size(); ++i) {
          out << FormatNumber(b->h) << ',' << p.label << ',' << FormatNumber(p.parameter) << ','
              << FormatNumber(p.times[i]) << ',' << FormatNumber(p.values[i]) << '\n';
        }
      }
    }
  }
}

}  // namespace alcl
