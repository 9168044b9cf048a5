/**
 * @file serialize.hpp
 * @brief JSON forms of field elements, algebra elements, modules, quiver
 *        representations and decomposition reports.
 *
 * Every exact value is written as reduced fraction strings, so a round trip
 * through text loses nothing. Readers throw std::invalid_argument on
 * malformed input.
 */

#pragma once

#include <string>

#include "json.hpp"
#include "uqsl/algebra.hpp"
#include "uqsl/category.hpp"
#include "uqsl/kronecker.hpp"
#include "uqsl/qmodule.hpp"

namespace uqsl {

using Json = nlohmann::json;

/// {"order": N, "coeffs": ["a/b", ...]}.
Json to_json(const CycNum& x);
CycNum cycnum_from_json(const Json& j);

/// Sparse triplets [[i, j, CycNum], ...].
Json matrix_to_triplets(const Matrix& m);
Matrix matrix_from_triplets(const Json& j, int rows, int cols);
/// Dense rows of CycNum.
Json matrix_to_rows(const Matrix& m);
Matrix matrix_from_rows(const Json& j, int rows, int cols);

/// {"p", "extended", "terms": [{"e", "f", "k", "c"}, ...]}.
Json to_json(const AlgElem& x);
AlgElem alg_elem_from_json(const Json& j);

/// {"p", "extended", "arity", "terms": [{"factors": [[e, f, k], ...], "c"}, ...]}.
Json to_json(const TensorElem& x);
TensorElem tensor_elem_from_json(const Json& j);

/// {"p", "dim", "weights", "E", "F", "K", "label"}; K must agree with the weights.
Json to_json(const QMod& m);
QMod qmod_from_json(const Json& j);

/// {"d0", "d1", "r", "rbar"} with dense rows.
Json to_json(const QuiverRep& rep);
QuiverRep quiver_from_json(const Json& j);

/// A point of CP^1 as two entries; rational entries are written as fraction strings.
Json to_json(const CP1& z);
CP1 cp1_from_json(const Json& j);

/// {"label": "O+_1", "n": 1, "z": ["1", "0"]}; n only for W, M, O and z only for O.
Json to_json(const ModuleLabel& l);
ModuleLabel label_from_json(const Json& j);

/// Array of {label..., "mult"}; with the certificate, an object
/// {"entries", "summands", "certificate": {"rows", "cols", "entries"}}.
Json to_json(const DecompReport& r, bool with_certificate = false);
DecompReport decomp_from_json(const Json& j);

/// [{"kind": "rho"|"rhobar"|"reg", "n", "z"?}, ...].
Json to_json(const QuiverDecomp& d);

/// Parses "a/b" or an integer into a reduced rational.
mpq_class parse_fraction(const std::string& s);

}  // namespace uqsl
