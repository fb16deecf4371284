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

#include "xassoc/checkpoint.hpp"

#include <fstream>

namespace xassoc {

using nlohmann::json;

namespace {

using Index = Eigen::Index;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json vector_entry(const Vector& v) {
  Matrix m(v.size(), 1);
  m.col(0) = v;
  return matrix_to_json(m);
}

Vector vector_from_entry(const json& j) {
  const Matrix m = matrix_from_json(j);
  if (m.cols() != 1) throw Error("checkpoint: expected a column vector");
  return m.col(0);
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("checkpoint: missing field '") + key + "'");
  return *it;
}

void expect_shape(const Matrix& m, Index rows, Index cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(std::string("checkpoint: '") + name + "' has shape " + std::to_string(m.rows()) +
                "x" + std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                std::to_string(cols));
  }
}

json trace_json(const std::vector<double>& trace) { return json(trace); }

json autoencoder_json(const MaskedAutoencoderModel& m, json& out) {
  const auto& l = m.layout;
  out["layout"] = {{"input_twitter", l.input_twitter},   {"input_youtube", l.input_youtube},
                   {"hidden_twitter", l.hidden_twitter}, {"hidden_common", l.hidden_common},
                   {"hidden_youtube", l.hidden_youtube}};
  const auto& p = m.params;
  out["weights"] = {{"encoder_twitter", matrix_to_json(p.encoder_twitter)},
                    {"encoder_youtube", matrix_to_json(p.encoder_youtube)},
                    {"decoder_twitter", matrix_to_json(p.decoder_twitter)},
                    {"decoder_youtube", matrix_to_json(p.decoder_youtube)},
                    {"hidden_bias", vector_entry(p.hidden_bias)},
                    {"output_bias_twitter", vector_entry(p.output_bias_twitter)},
                    {"output_bias_youtube", vector_entry(p.output_bias_youtube)}};
  out["masks"] = {{"encoder_twitter", matrix_to_json(m.masks.encoder_twitter)},
                  {"encoder_youtube", matrix_to_json(m.masks.encoder_youtube)},
                  {"decoder_twitter", matrix_to_json(m.masks.decoder_twitter)},
                  {"decoder_youtube", matrix_to_json(m.masks.decoder_youtube)}};
  out["hyper"] = {{"lambda", m.weight_decay},
                  {"mu", m.sparsity},
                  {"activation", "sigmoid"},
                  {"initial_loss", m.initial_loss},
                  {"loss_trace", trace_json(m.loss_trace)}};
  return out;
}

MaskedAutoencoderModel autoencoder_from_json(const json& j) {
  const json& lj = field(j, "layout");
  AutoencoderLayout l;
  l.input_twitter = field(lj, "input_twitter").get<std::size_t>();
  l.input_youtube = field(lj, "input_youtube").get<std::size_t>();
  l.hidden_twitter = field(lj, "hidden_twitter").get<std::size_t>();
  l.hidden_common = field(lj, "hidden_common").get<std::size_t>();
  l.hidden_youtube = field(lj, "hidden_youtube").get<std::size_t>();
  l.validate();

  const json& hyper = field(j, "hyper");
  if (hyper.value("activation", std::string("sigmoid")) != "sigmoid") {
    throw Error("checkpoint: only the sigmoid activation is supported");
  }
  MaskedAutoencoderModel m = MaskedAutoencoderModel::zeros(l, field(hyper, "lambda").get<double>(),
                                                           field(hyper, "mu").get<double>());
  m.initial_loss = hyper.value("initial_loss", 0.0);
  m.loss_trace = hyper.value("loss_trace", std::vector<double>{});

  const json& w = field(j, "weights");
  const auto mh = static_cast<Index>(l.hidden());
  const auto nt = static_cast<Index>(l.input_twitter);
  const auto ny = static_cast<Index>(l.input_youtube);
  auto& p = m.params;
  p.encoder_twitter = matrix_from_json(field(w, "encoder_twitter"));
  p.encoder_youtube = matrix_from_json(field(w, "encoder_youtube"));
  p.decoder_twitter = matrix_from_json(field(w, "decoder_twitter"));
  p.decoder_youtube = matrix_from_json(field(w, "decoder_youtube"));
  p.hidden_bias = vector_from_entry(field(w, "hidden_bias"));
  p.output_bias_twitter = vector_from_entry(field(w, "output_bias_twitter"));
  p.output_bias_youtube = vector_from_entry(field(w, "output_bias_youtube"));
  expect_shape(p.encoder_twitter, mh, nt, "encoder_twitter");
  expect_shape(p.encoder_youtube, mh, ny, "encoder_youtube");
  expect_shape(p.decoder_twitter, nt, mh, "decoder_twitter");
  expect_shape(p.decoder_youtube, ny, mh, "decoder_youtube");
  if (p.hidden_bias.size() != mh || p.output_bias_twitter.size() != nt ||
      p.output_bias_youtube.size() != ny) {
    throw Error("checkpoint: bias vector has the wrong length");
  }

  if (j.contains("masks")) {
    const json& mj = j["masks"];
    const AutoencoderMasks& expected = m.masks;
    for (const auto& [name, mask] :
         {std::pair{"encoder_twitter", &expected.encoder_twitter},
          std::pair{"encoder_youtube", &expected.encoder_youtube},
          std::pair{"decoder_twitter", &expected.decoder_twitter},
          std::pair{"decoder_youtube", &expected.decoder_youtube}}) {
      if (matrix_from_json(field(mj, name)) != *mask) {
        throw Error(std::string("checkpoint: mask '") + name + "' does not match the layout");
      }
    }
  }
  if (!m.mask_respected()) throw Error("checkpoint: non-zero weight at a masked position");
  return m;
}

}  // namespace

std::string_view model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Dca:
      return "dca";
    case ModelKind::Ma:
      return "ma";
    case ModelKind::Lr:
      return "lr";
    case ModelKind::La:
      return "la";
    case ModelKind::Mlp:
      return "mlp";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view s) {
  for (ModelKind k : {ModelKind::Dca, ModelKind::Ma, ModelKind::Lr, ModelKind::La, ModelKind::Mlp}) {
    if (model_kind_name(k) == s) return k;
  }
  throw Error("unknown model kind '" + std::string(s) + "' (expected dca, ma, lr, la or mlp)");
}

ModelKind kind_of(const AnyModel& model) {
  return std::visit(overloaded{[](const MaskedAutoencoderModel& m) {
                                 return m.layout.disparity_preserving() ? ModelKind::Dca
                                                                        : ModelKind::Ma;
                               },
                               [](const RidgeTransfer&) { return ModelKind::Lr; },
                               [](const LatentAttribute&) { return ModelKind::La; },
                               [](const MlpMapper&) { return ModelKind::Mlp; }},
                    model);
}

json matrix_to_json(const Matrix& m) {
  if (!all_finite(m)) throw Error("checkpoint: refusing to serialize non-finite values");
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"data", std::vector<double>(m.data(), m.data() + m.size())}};
}

Matrix matrix_from_json(const json& j) {
  const auto rows = field(j, "rows").get<Index>();
  const auto cols = field(j, "cols").get<Index>();
  const json& data = field(j, "data");
  if (rows < 0 || cols < 0 || !data.is_array() ||
      data.size() != static_cast<std::size_t>(rows * cols)) {
    throw Error("checkpoint: matrix data length does not match rows x cols");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!data[i].is_number()) throw Error("checkpoint: matrix entry is not a number");
    m.data()[i] = data[i].get<double>();
  }
  if (!all_finite(m)) throw Error("checkpoint: matrix contains non-finite values");
  return m;
}

json checkpoint_to_json(const Checkpoint& ckpt) {
  json out = {{"format_version", kCheckpointFormatVersion},
              {"kind", model_kind_name(kind_of(ckpt.model))}};
  std::visit(
      overloaded{
          [&](const MaskedAutoencoderModel& m) { autoencoder_json(m, out); },
          [&](const RidgeTransfer& m) {
            out["layout"] = {{"src_dim", m.weights.cols()}, {"dst_dim", m.weights.rows()}};
            out["weights"] = {{"W", matrix_to_json(m.weights)}};
            out["masks"] = json::object();
            out["hyper"] = {{"lambda", m.lambda}, {"direction", direction_name(m.direction)}};
          },
          [&](const LatentAttribute& m) {
            out["layout"] = {{"dim_twitter", m.dict_twitter.rows()},
                             {"dim_youtube", m.dict_youtube.rows()},
                             {"atoms", m.atoms()}};
            out["weights"] = {{"dict_twitter", matrix_to_json(m.dict_twitter)},
                              {"dict_youtube", matrix_to_json(m.dict_youtube)}};
            out["masks"] = json::object();
            out["hyper"] = {{"lambda", m.lambda}, {"objective_trace", m.objective_trace}};
          },
          [&](const MlpMapper& m) {
            out["layout"] = {{"src_dim", m.src_dim()}, {"hidden", m.hidden()}, {"dst_dim", m.dst_dim()}};
            out["weights"] = {{"hidden_weights", matrix_to_json(m.params.hidden_weights)},
                              {"hidden_bias", vector_entry(m.params.hidden_bias)},
                              {"output_weights", matrix_to_json(m.params.output_weights)},
                              {"output_bias", vector_entry(m.params.output_bias)}};
            out["masks"] = json::object();
            out["hyper"] = {{"direction", direction_name(m.direction)},
                            {"weight_decay", m.weight_decay},
                            {"activation", "sigmoid"},
                            {"output_activation", mlp_output_name(m.output)},
                            {"initial_loss", m.initial_loss},
                            {"loss_trace", m.loss_trace}};
          }},
      ckpt.model);
  out["training"] = ckpt.training;
  return out;
}

Checkpoint checkpoint_from_json(const json& j) {
  const int version = field(j, "format_version").get<int>();
  if (version != kCheckpointFormatVersion) {
    throw Error("checkpoint: unsupported format_version " + std::to_string(version));
  }
  const ModelKind kind = parse_model_kind(field(j, "kind").get<std::string>());
  Checkpoint ckpt;
  ckpt.training = j.value("training", json::object());
  const json& w = field(j, "weights");
  const json& hyper = field(j, "hyper");
  switch (kind) {
    case ModelKind::Dca:
    case ModelKind::Ma: {
      MaskedAutoencoderModel m = autoencoder_from_json(j);
      if (kind_of(AnyModel(m)) != kind) throw Error("checkpoint: kind does not match the layout");
      ckpt.model = std::move(m);
      break;
    }
    case ModelKind::Lr: {
      RidgeTransfer m;
      m.weights = matrix_from_json(field(w, "W"));
      m.lambda = field(hyper, "lambda").get<double>();
      m.direction = parse_direction(field(hyper, "direction").get<std::string>());
      ckpt.model = std::move(m);
      break;
    }
    case ModelKind::La: {
      LatentAttribute m;
      m.dict_twitter = matrix_from_json(field(w, "dict_twitter"));
      m.dict_youtube = matrix_from_json(field(w, "dict_youtube"));
      if (m.dict_twitter.cols() != m.dict_youtube.cols()) {
        throw Error("checkpoint: dictionaries have different atom counts");
      }
      m.lambda = field(hyper, "lambda").get<double>();
      m.objective_trace = hyper.value("objective_trace", std::vector<double>{});
      ckpt.model = std::move(m);
      break;
    }
    case ModelKind::Mlp: {
      MlpMapper m;
      m.params.hidden_weights = matrix_from_json(field(w, "hidden_weights"));
      m.params.hidden_bias = vector_from_entry(field(w, "hidden_bias"));
      m.params.output_weights = matrix_from_json(field(w, "output_weights"));
      m.params.output_bias = vector_from_entry(field(w, "output_bias"));
      const Index hidden = m.params.hidden_weights.rows();
      if (m.params.hidden_bias.size() != hidden || m.params.output_weights.cols() != hidden ||
          m.params.output_bias.size() != m.params.output_weights.rows()) {
        throw Error("checkpoint: inconsistent MLP shapes");
      }
      m.direction = parse_direction(field(hyper, "direction").get<std::string>());
      m.output = parse_mlp_output(field(hyper, "output_activation").get<std::string>());
      m.weight_decay = hyper.value("weight_decay", 0.0);
      m.initial_loss = hyper.value("initial_loss", 0.0);
      m.loss_trace = hyper.value("loss_trace", std::vector<double>{});
      ckpt.model = std::move(m);
      break;
    }
  }
  return ckpt;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write checkpoint " + path.string());
  out << checkpoint_to_json(ckpt).dump() << '\n';
  if (!out) throw Error("failed writing checkpoint " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open checkpoint " + path.string());
  try {
    return checkpoint_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace xassoc
