#include "segre/betti_table.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace segre {

BettiTable::BettiTable(DimVector dims, int pmax, int qmax)
    : dims_(std::move(dims)), pmax_(pmax), qmax_(qmax) {
  if (pmax < 0 || qmax < 0)
    throw std::invalid_argument("negative table bound");
}

void BettiTable::set(int p, int q, std::uint64_t value) {
  if (p < 0 || q < 0 || p > pmax_ || q > qmax_)
    throw std::out_of_range("cell outside the table window");
  cells_[{p, q}] = value;
}

std::uint64_t BettiTable::at(int p, int q) const {
  auto it = cells_.find({p, q});
  return it == cells_.end() ? 0 : it->second;
}

std::string BettiTable::to_m2() const {
  int last_p = 0, last_q = 0;
  for (const auto& [key, value] : cells_) {
    if (value == 0)
      continue;
    last_p = std::max(last_p, key.first);
    last_q = std::max(last_q, key.second);
  }
  const auto columns = static_cast<std::size_t>(last_p + 1);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> labels;

  std::vector<std::string> header(columns);
  std::vector<std::string> total(columns);
  for (int p = 0; p <= last_p; ++p) {
    std::uint64_t sum = 0;
    for (int q = 0; q <= last_q; ++q)
      sum += at(p, q);
    header[static_cast<std::size_t>(p)] = std::to_string(p);
    total[static_cast<std::size_t>(p)] = std::to_string(sum);
  }
  labels.emplace_back("");
  rows.push_back(std::move(header));
  labels.emplace_back("total:");
  rows.push_back(std::move(total));
  for (int q = 0; q <= last_q; ++q) {
    std::vector<std::string> row(columns);
    for (int p = 0; p <= last_p; ++p) {
      std::uint64_t v = at(p, q);
      row[static_cast<std::size_t>(p)] = v == 0 ? "." : std::to_string(v);
    }
    labels.push_back(std::to_string(q) + ":");
    rows.push_back(std::move(row));
  }

  std::size_t label_width = 0;
  for (const auto& l : labels)
    label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(columns, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < columns; ++c)
      width[c] = std::max(width[c], row[c].size());

  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out.append(label_width - labels[r].size(), ' ');
    out += labels[r];
    for (std::size_t c = 0; c < columns; ++c) {
      out += ' ';
      out.append(width[c] - rows[r][c].size(), ' ');
      out += rows[r][c];
    }
    out += '\n';
  }
  return out;
}

std::string BettiTable::to_json() const {
  std::vector<std::pair<std::pair<int, int>, std::uint64_t>> sorted(cells_.begin(), cells_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return std::pair(x.first.second, x.first.first) < std::pair(y.first.second, y.first.first);
  });
  nlohmann::ordered_json j;
  j["a"] = std::vector<int>(dims_.extents().begin(), dims_.extents().end());
  j["dims"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : sorted)
    j["dims"].push_back({key.first, key.second, value});
  return j.dump() + "\n";
}

std::map<std::pair<int, int>, std::uint64_t> BettiTable::parse_m2(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line))
    if (line.find_first_not_of(' ') != std::string::npos)
      lines.push_back(line);
  if (lines.size() < 2)
    throw std::invalid_argument("Betti table needs a header and a total row");

  auto tokens = [](const std::string& s) {
    std::istringstream ts(s);
    std::vector<std::string> out;
    for (std::string t; ts >> t;)
      out.push_back(t);
    return out;
  };
  const auto header = tokens(lines[0]);
  std::map<std::pair<int, int>, std::uint64_t> cells;
  for (std::size_t r = 2; r < lines.size(); ++r) {
    auto row = tokens(lines[r]);
    int q = static_cast<int>(r) - 2;
    if (!row.empty() && row.front().back() == ':') {
      q = std::stoi(row.front().substr(0, row.front().size() - 1));
      row.erase(row.begin());
    }
    if (row.size() != header.size())
      throw std::invalid_argument("row " + std::to_string(q) + " has the wrong number of columns");
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != ".")
        cells[{std::stoi(header[c]), q}] = std::stoull(row[c]);
  }
  return cells;
}

} // namespace segre
