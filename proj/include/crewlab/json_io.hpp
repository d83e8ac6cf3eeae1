#pragma once

#include <string>

#include <json.hpp>

#include "crewlab/counting.hpp"
#include "crewlab/frames.hpp"
#include "crewlab/seidel.hpp"
#include "crewlab/spectra.hpp"
#include "crewlab/twograph.hpp"

namespace crewlab {

using json = nlohmann::json;

// All readers throw Error with a machine-readable code ("bad-json",
// "missing-field:<name>", "bad-field:<name>", "bad-range:<name>") on
// malformed input. Vertex indices are 1-based on the wire.

json seidel_to_json(const SeidelMatrix& s);
SeidelMatrix seidel_from_json(const json& j);

json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const json& j);

json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const json& j);

json twograph_to_json(const TwoGraphData& t);
TwoGraphData twograph_from_json(const json& j);

json frame_to_json(const FrameSystem& f);
FrameSystem frame_from_json(const json& j);

// raw complex matrix with declared order: {"m":3,"matrix":[[[re,im],...],...]}
struct RawComplexInput {
    std::uint32_t m = 0;
    ComplexMatrixView matrix;
};
RawComplexInput raw_matrix_from_json(const json& j);

json certificate_to_json(const CertificateResult& r);
json neighborhood_report_to_json(const NeighborhoodReport& r);
json etf_report_to_json(const EtfReport& r);
json bound_report_to_json(const BoundReport& r);
json validate_result_to_json(const ValidateResult& r);
json srg_to_json(const SimpleGraph& g);
json table_to_json(const std::vector<TableCell>& cells);
std::string table_to_csv(const std::vector<TableCell>& cells);
json demo_report_to_json(const DemoReport& d);

json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

} // namespace crewlab
