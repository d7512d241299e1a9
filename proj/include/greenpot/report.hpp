#ifndef GREENPOT_REPORT_HPP
#define GREENPOT_REPORT_HPP

// CSV and structured-record (JSON) rendering. All numbers use 12 significant digits;
// identical inputs render to identical bytes.

#include "greenpot/blaschke.hpp"
#include "greenpot/constants.hpp"
#include "greenpot/equilibrium.hpp"
#include "greenpot/riesz.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace greenpot {

nlohmann::ordered_json to_record(const FeketeResult& f);
nlohmann::ordered_json to_record(const EquilibriumResult& eq);
nlohmann::ordered_json to_record(const ConstantsReport& rep);
nlohmann::ordered_json to_record(const ExtremalSweepRow& row);
nlohmann::ordered_json to_record(const GridDensity& grid);

inline const char* kSweepCsvHeader = "n,product_norm,factor_norm_product,ratio,target_e_minus_C,moment_gap";
inline const char* kConstantsCsvHeader = "set,robin,sigma_mass,c_route_a,c_route_b,c_closed,discrepancy";
inline const char* kFeketeCsvHeader = "n,energy,normalized_energy,min_potential,restarts_used,converged";

void write_sweep_csv(std::ostream& out, std::vector<ExtremalSweepRow> rows);
void write_constants_csv(std::ostream& out, const ConstantsReport& rep);
void write_fekete_csv(std::ostream& out, const std::vector<FeketeResult>& results);
/// Aligned human-readable table of a constants report.
void print_constants_table(std::ostream& out, const ConstantsReport& rep);

/// Writes text to path, throwing std::runtime_error with the path on failure.
void write_file(const std::string& path, const std::string& contents);

}  // namespace greenpot

#endif  // GREENPOT_REPORT_HPP
