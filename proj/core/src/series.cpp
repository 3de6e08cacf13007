/* Copyright 2026 The svzeta Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "svzeta/series.hpp"

namespace svzeta {

nlohmann::json coefficient_to_json(const Rational& c) { return c.str(); }
nlohmann::json coefficient_to_json(const MzvExpr& c) { return c.to_json(); }
nlohmann::json coefficient_to_json(const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); }
nlohmann::json coefficient_to_json(double c) { return c; }

template class NCSeries<Rational>;
template class NCSeries<MzvExpr>;
template class NCSeries<Complex>;
template class NCSeries<double>;

}  // namespace svzeta
