#include "wiretap/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wiretap {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

FiniteDistribution parse_distribution(const json& node, const char* name) {
  if (!node.is_array())
    throw std::invalid_argument(std::string(name) + " must be an array");
  std::vector<double> probs;
  probs.reserve(node.size());
  for (const auto& v : node) probs.push_back(v.get<double>());
  return FiniteDistribution(std::move(probs));
}

std::vector<double> parse_matrix(const json& node, const char* name, int& rows,
                                 int& cols) {
  if (!node.is_array() || node.empty() || !node.front().is_array())
    throw std::invalid_argument(std::string(name) +
                                " must be a nonempty array of arrays");
  rows = static_cast<int>(node.size());
  cols = static_cast<int>(node.front().size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(rows) * cols);
  for (const auto& row : node) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw std::invalid_argument(std::string(name) + " rows must be rectangular");
    for (const auto& v : row) flat.push_back(v.get<double>());
  }
  return flat;
}

Channel parse_channel(const json& node, const char* name) {
  int rows = 0, cols = 0;
  std::vector<double> flat = parse_matrix(node, name, rows, cols);
  return Channel(rows, cols, std::move(flat));
}

}  // namespace

SystemSpec make_bsc_hamming_spec(const BscShorthand& bsc) {
  return SystemSpec(FiniteDistribution::bernoulli(bsc.p), Channel::bsc(bsc.p1),
                    Channel::bsc(bsc.p2), ValueMatrix::hamming(2));
}

LoadedSpec load_spec_json(const std::string& text) {
  json root = json::parse(text);
  if (root.contains("bsc")) {
    const json& b = root["bsc"];
    BscShorthand sh;
    sh.p = b.at("p").get<double>();
    sh.p1 = b.at("p1").get<double>();
    sh.p2 = b.at("p2").get<double>();
    if (b.contains("hamming") && !b["hamming"].get<bool>())
      throw std::invalid_argument("bsc shorthand supports only hamming: true");
    if (sh.p1 > sh.p2)
      throw std::invalid_argument("bsc shorthand needs p1 <= p2");
    return LoadedSpec{make_bsc_hamming_spec(sh), sh};
  }
  FiniteDistribution source = parse_distribution(root.at("source"), "source");
  Channel ch_y = parse_channel(root.at("channel_y"), "channel_y");
  Channel ch_z = parse_channel(root.at("channel_z"), "channel_z");
  int rows = 0, cols = 0;
  std::vector<double> v = parse_matrix(root.at("value"), "value", rows, cols);
  return LoadedSpec{SystemSpec(std::move(source), std::move(ch_y),
                               std::move(ch_z),
                               ValueMatrix(rows, cols, std::move(v))),
                    std::nullopt};
}

LoadedSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_spec_json(buf.str());
}

std::string codebook_to_json(const BlockCode& code) {
  const std::size_t ns = pow_size(code.source_size, code.n);
  const std::size_t nx = pow_size(code.input_size, code.n);
  ordered_json doc;
  doc["n"] = code.n;
  doc["alphabets"] = {{"s", code.source_size},
                      {"x", code.input_size},
                      {"y", code.y_size}};
  doc["seed"] = code.seed;
  doc["rate_pair"] = {{"rp", code.rate_public}, {"rs", code.rate_secure}};
  doc["encoder_kind"] = code.kind;
  doc["satellite_redraw"] = code.satellite_redraw;
  doc["randomization"] = code.randomization;

  ordered_json tables;
  ordered_json encoder = ordered_json::array();
  for (std::size_t s = 0; s < ns; ++s)
    encoder.push_back(std::vector<double>(
        code.encoder.begin() + static_cast<std::ptrdiff_t>(s * nx),
        code.encoder.begin() + static_cast<std::ptrdiff_t>((s + 1) * nx)));
  tables["encoder"] = std::move(encoder);
  tables["decoder"] = code.decoder;
  if (code.split) {
    tables["mp_count"] = code.split->mp_count;
    tables["ms_count"] = code.split->ms_count;
    tables["mp_of_seq"] = code.split->mp_of_seq;
    tables["ms_of_seq"] = code.split->ms_of_seq;
  }
  if (code.encoder_by_message) {
    const std::size_t pairs = code.encoder_by_message->size() / nx;
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < pairs; ++r)
      rows.push_back(std::vector<double>(
          code.encoder_by_message->begin() + static_cast<std::ptrdiff_t>(r * nx),
          code.encoder_by_message->begin() +
              static_cast<std::ptrdiff_t>((r + 1) * nx)));
    tables["encoder_by_message"] = std::move(rows);
  }
  if (!code.v_words.empty()) tables["v_words"] = code.v_words;
  if (!code.w_words.empty()) tables["w_words"] = code.w_words;
  doc["tables"] = std::move(tables);
  return doc.dump(2) + "\n";
}

BlockCode codebook_from_json(const std::string& text) {
  json doc = json::parse(text);
  BlockCode code;
  code.n = doc.at("n").get<int>();
  code.source_size = doc.at("alphabets").at("s").get<int>();
  code.input_size = doc.at("alphabets").at("x").get<int>();
  code.y_size = doc.at("alphabets").at("y").get<int>();
  code.seed = doc.at("seed").get<std::uint64_t>();
  code.rate_public = doc.at("rate_pair").at("rp").get<double>();
  code.rate_secure = doc.at("rate_pair").at("rs").get<double>();
  code.kind = doc.at("encoder_kind").get<std::string>();
  code.satellite_redraw = doc.value("satellite_redraw", 0.0);
  code.randomization = doc.value("randomization", 1);

  const json& tables = doc.at("tables");
  const std::size_t ns = pow_size(code.source_size, code.n);
  const std::size_t nx = pow_size(code.input_size, code.n);
  code.encoder.reserve(ns * nx);
  for (const auto& row : tables.at("encoder"))
    for (const auto& v : row) code.encoder.push_back(v.get<double>());
  code.decoder = tables.at("decoder").get<std::vector<int>>();
  if (tables.contains("mp_of_seq")) {
    MessageSplit split;
    split.mp_count = tables.at("mp_count").get<int>();
    split.ms_count = tables.at("ms_count").get<int>();
    split.mp_of_seq = tables.at("mp_of_seq").get<std::vector<int>>();
    split.ms_of_seq = tables.at("ms_of_seq").get<std::vector<int>>();
    code.split = std::move(split);
  }
  if (tables.contains("encoder_by_message")) {
    std::vector<double> rows;
    for (const auto& row : tables.at("encoder_by_message"))
      for (const auto& v : row) rows.push_back(v.get<double>());
    code.encoder_by_message = std::move(rows);
  }
  if (tables.contains("v_words"))
    code.v_words = tables.at("v_words").get<std::vector<int>>();
  if (tables.contains("w_words"))
    code.w_words =
        tables.at("w_words").get<std::vector<std::vector<std::vector<int>>>>();
  return code;
}

}  // namespace wiretap
