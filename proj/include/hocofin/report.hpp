#pragma once

// JSON renderings of results. Keys are emitted in sorted order, so identical
// inputs give byte-identical reports.

#include <json.hpp>

#include "hocofin/cofinal.hpp"
#include "hocofin/diagrams.hpp"
#include "hocofin/gz.hpp"
#include "hocofin/hocolim.hpp"

namespace hocofin {

using Json = nlohmann::json;

Json to_json(const AbelianInvariants& a);
Json to_json(const std::vector<AbelianInvariants>& h);
Json to_json(const GroupPresentation& p);
Json to_json(const DegreeZero& d);
Json to_json(const ContractibilityCertificate& c);
Json to_json(const CofinalReport& r, const FinCat& target);
Json to_json(const FinallyDiscreteReport& r, const FinCat& c);
Json to_json(const VdcReport& r, const FinCat& target);
Json to_json(const GzResult& r);
Json to_json(const BwResult& r);
Json to_json(const HocolimComparison& r);
Json to_json(const LcodecarReport& r);
Json to_json(const ImageComparison& r);
Json to_json(const AndreResult& r);
Json to_json(const BwComparison& r);
Json to_json(const FreeProduct& g);
Json to_json(const GroupDiagram& g);
Json to_json(const FinCat& c);

}  // namespace hocofin
