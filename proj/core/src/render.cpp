// Copyright 2026 The singlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "singlab/render.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "singlab/error.hpp"

namespace singlab {

namespace {

using Json = nlohmann::ordered_json;

std::int64_t narrow(const BigInt& value, const char* field) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, std::string(field) + " does not fit a JSON integer");
  }
  return value.convert_to<std::int64_t>();
}

Json rational_json(const Rational& value) {
  Json out;
  out["num"] = value.num().str();
  out["den"] = value.den().str();
  out["approx"] = value.approx(15);
  return out;
}

Json row_json(const InvariantReport& row) {
  Json out;
  out["p"] = narrow(row.p, "p");
  out["q"] = narrow(row.q, "q");
  out["chain"] = std::vector<std::int64_t>(row.chain.entries().begin(), row.chain.entries().end());
  out["k"] = row.k;
  out["sum_e"] = row.sum_e;
  out["q_inv"] = narrow(row.q_inv, "q_inv");
  out["eta"] = rational_json(row.eta);
  out["b2"] = row.b2;
  out["c"] = rational_json(row.c_value);
  out["positive"] = row.positive;
  out["label"] = row.label;
  return out;
}

std::string json_array(const std::vector<Json>& items) {
  if (items.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += "  ";
    out += items[i].dump();
    out += i + 1 < items.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

const std::vector<std::string> kColumns = {"p",  "q", "chain", "k",        "sum_e", "q_inv",
                                           "eta", "b2", "c",   "positive", "label"};

std::vector<std::string> csv_cells(const InvariantReport& row) {
  return {row.p.str(),       row.q.str(),         row.chain.str(),
          std::to_string(row.k), std::to_string(row.sum_e), row.q_inv.str(),
          row.eta.str(),     std::to_string(row.b2), row.c_value.str(),
          row.positive ? "true" : "false", row.label};
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  out += '\n';
  return out;
}

struct Column {
  std::string header;
  bool right_aligned;
};

std::string aligned(const std::vector<Column>& columns,
                    const std::vector<std::vector<std::string>>& body) {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].header.size();
  for (const auto& line : body) {
    for (std::size_t c = 0; c < columns.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  auto emit = [&](const std::vector<std::string>& cells, std::string& out) {
    std::string line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) line += "  ";
      const std::string pad(width[c] - cells[c].size(), ' ');
      line += columns[c].right_aligned ? pad + cells[c] : cells[c] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  };
  std::string out;
  std::vector<std::string> header;
  for (const auto& col : columns) header.push_back(col.header);
  emit(header, out);
  for (const auto& line : body) emit(line, out);
  return out;
}

const std::vector<Column> kTableColumns = {
    {"p", true},   {"q", true},  {"chain", false}, {"k", true}, {"sum_e", true},
    {"q_inv", true}, {"eta", true}, {"b2", true},    {"C", true}, {"label", false}};

std::vector<std::string> table_cells(const InvariantReport& row) {
  return {row.p.str(),
          row.q.str(),
          row.chain.str(),
          std::to_string(row.k),
          std::to_string(row.sum_e),
          row.q_inv.str(),
          row.eta.str(),
          std::to_string(row.b2),
          row.c_value.str() + (row.positive ? "+" : " "),
          row.label};
}

}  // namespace

std::string render_table(const std::vector<InvariantReport>& rows) {
  std::vector<std::vector<std::string>> body;
  body.reserve(rows.size());
  for (const auto& row : rows) body.push_back(table_cells(row));
  return aligned(kTableColumns, body);
}

std::string render_json(const std::vector<InvariantReport>& rows) {
  std::vector<Json> items;
  items.reserve(rows.size());
  for (const auto& row : rows) items.push_back(row_json(row));
  return json_array(items);
}

std::string render_csv(const std::vector<InvariantReport>& rows) {
  std::string out = csv_line(kColumns);
  for (const auto& row : rows) out += csv_line(csv_cells(row));
  return out;
}

std::string render(const std::vector<InvariantReport>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return render_json(rows);
    case OutputFormat::Csv: return render_csv(rows);
    case OutputFormat::Table: break;
  }
  return render_table(rows);
}

std::string render_theorem_rows(const std::vector<TheoremRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      std::vector<Json> items;
      for (const auto& row : rows) {
        Json item;
        item["family"] = row.family;
        item["r"] = row.r;
        const Json fields = row_json(row.report);
        for (auto& [key, value] : fields.items()) item[key] = value;
        items.push_back(std::move(item));
      }
      return json_array(items);
    }
    case OutputFormat::Csv: {
      std::vector<std::string> header = {"family", "r"};
      header.insert(header.end(), kColumns.begin(), kColumns.end());
      std::string out = csv_line(header);
      for (const auto& row : rows) {
        std::vector<std::string> cells = {row.family, std::to_string(row.r)};
        auto rest = csv_cells(row.report);
        cells.insert(cells.end(), rest.begin(), rest.end());
        out += csv_line(cells);
      }
      return out;
    }
    case OutputFormat::Table: break;
  }
  std::vector<Column> columns = {{"family", false}, {"r", true}};
  columns.insert(columns.end(), kTableColumns.begin(), kTableColumns.end());
  std::vector<std::vector<std::string>> body;
  for (const auto& row : rows) {
    std::vector<std::string> cells = {row.family, row.r ? std::to_string(row.r) : "-"};
    auto rest = table_cells(row.report);
    cells.insert(cells.end(), rest.begin(), rest.end());
    body.push_back(std::move(cells));
  }
  return aligned(columns, body);
}

}  // namespace singlab
