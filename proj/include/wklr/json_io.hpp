#pragma once

#include <json.hpp>

#include "wklr/abacus.hpp"
#include "wklr/cellular.hpp"
#include "wklr/fock.hpp"
#include "wklr/tableau.hpp"

namespace wklr {

using nlohmann::json;

// LaurentPoly <-> {"<exponent>": <coefficient>} with decimal string keys.
json toJson(const LaurentPoly& f);
LaurentPoly laurentFromJson(const json& j);

// Multipartition <-> [[6,5,3,1],[4,4,3]].
json toJson(const Multipartition& xi);
Multipartition multipartitionFromJson(const json& j);

// Weighting <-> {"kappa":"-9/2","theta":["0","9"],"charges":[0,0],"e":2}.
json toJson(const Weighting& w);
Weighting weightingFromJson(const json& j);

// Abacus <-> {"charge":0,"extraBeads":[3],"missingBeads":[-2]}.
json toJson(const Abacus& a);
Abacus abacusFromJson(const json& j);

// EntryPos <-> "real" or "real@eps".
json toJson(const EntryPos& p);
EntryPos entryPosFromJson(const json& j);

// Loading <-> {"points":[{"pos":"1","res":0},...]}.
json toJson(const Loading& L);
Loading loadingFromJson(const json& j);

// Tableau <-> {"shape":[[2],[]],"entries":{"1,1,1":"1","1,2,1":"3"}} with
// 1-based "component,row,col" keys.
json toJson(const ITableau& t);

// FockVector <-> {"terms":[{"shape":[[1],[]],"coeff":{"-1":1}}]}.
json toJson(const FockVector& v);
FockVector fockVectorFromJson(const json& j, const Weighting& w);

json toJson(const GradedMatrix& M);

json toJson(const RunnerMatrix& M);

}  // namespace wklr
