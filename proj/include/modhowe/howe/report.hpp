#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "modhowe/howe/howe_table.hpp"
#include "modhowe/howe/verify.hpp"

namespace modhowe::howe {

/// {params, entries:[{tau, dim, status, constituents, lusztig_note, provenance}],
///  checks:[{name, expected, actual, pass}]}; integers are decimal strings.
nlohmann::json table_to_json(const HoweTable& t, const std::vector<SemisimplificationRow>& comparison = {});
std::string table_to_markdown(const HoweTable& t, const std::vector<SemisimplificationRow>& comparison = {});
/// One row per entry: tau,dim,status,constituents.
std::string table_to_csv(const HoweTable& t);

nlohmann::json checks_to_json(const std::vector<Check>& checks);
nlohmann::json summary_to_json(const VerifySummary& s);
std::string summary_to_markdown(const VerifySummary& s);
std::string summary_to_csv(const VerifySummary& s);

}  // namespace modhowe::howe
