#ifndef MUBKIT_JSON_IO_HPP
#define MUBKIT_JSON_IO_HPP

#include <json.hpp>

#include "mubkit/cmatrix.hpp"

namespace mubkit {

using json = nlohmann::ordered_json;

// float:  {"rows":R,"cols":C,"repr":"float","entries":[[re,im],...]}
// exact:  {"rows":R,"cols":C,"repr":"exact","order":L,
//          "scalePow":s,"scaleRat":"p/q","scaleBase":d,"entries":[[c0,c1,...],...]}
// with the entry value scaleRat * sqrt(scaleBase)^scalePow * sum c_k gamma_order^k
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

} // namespace mubkit

#endif
