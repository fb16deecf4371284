//
// Copyright (C) 2026 The xassoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef XASSOC_CHECKPOINT_HPP_
#define XASSOC_CHECKPOINT_HPP_

#include <filesystem>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "xassoc/autoencoder.hpp"
#include "xassoc/latent_attribute.hpp"
#include "xassoc/mlp.hpp"
#include "xassoc/ridge.hpp"

namespace xassoc {

inline constexpr int kCheckpointFormatVersion = 1;

enum class ModelKind { Dca, Ma, Lr, La, Mlp };

std::string_view model_kind_name(ModelKind k);
ModelKind parse_model_kind(std::string_view s);

using AnyModel = std::variant<MaskedAutoencoderModel, RidgeTransfer, LatentAttribute, MlpMapper>;

ModelKind kind_of(const AnyModel& model);

struct Checkpoint {
  AnyModel model;
  /// Pipeline context stored alongside the weights (split seed, inference
  /// substitutes, filter thresholds). Opaque to this module.
  nlohmann::json training = nlohmann::json::object();
};

// {"format_version": 1, "kind": "dca|ma|lr|la|mlp", "layout": {...},
//  "weights": {name: {"rows": r, "cols": c, "data": [...]}},
//  "masks": {same encoding}, "hyper": {...}, "training": {...}}
nlohmann::json checkpoint_to_json(const Checkpoint& ckpt);
/// Validates shapes, finiteness and (for autoencoders) the mask invariant.
Checkpoint checkpoint_from_json(const nlohmann::json& j);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace xassoc

#endif  // XASSOC_CHECKPOINT_HPP_
