#include "render.hpp"

#include <algorithm>
#include <sstream>

#include "hookbox/json_io.hpp"

namespace hookbox::cli {

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

// Every cell padded to the widest entry, cells separated by one space.
std::string ascii_grid(const Grid& grid, bool right_align) {
  std::size_t width = 0;
  for (const auto& row : grid) {
    for (const auto& cell : row) width = std::max(width, cell.size());
  }
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) line += ' ';
      line += right_align ? pad_left(row[k], width) : pad_right(row[k], width);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string latex_grid(const Grid& grid, bool math) {
  std::size_t cols = 0;
  for (const auto& row : grid) cols = std::max(cols, row.size());
  std::string out = "\\begin{tabular}{" + std::string(cols, 'c') + "}\n";
  for (const auto& row : grid) {
    for (std::size_t k = 0; k < cols; ++k) {
      if (k) out += " & ";
      if (k < row.size() && !row[k].empty()) {
        out += math ? "$" + row[k] + "$" : row[k];
      }
    }
    out += " \\\\\n";
  }
  out += "\\end{tabular}\n";
  return out;
}

std::string box_value(const Partition& lambda, BoxCoord b, Overlay overlay) {
  const BoxStats s = box_stats(lambda, b);
  switch (overlay) {
    case Overlay::none:
      return "#";
    case Overlay::content:
      return std::to_string(s.content);
    case Overlay::hook:
      return std::to_string(s.hook);
    case Overlay::arm_leg:
      return std::to_string(s.arm) + "," + std::to_string(s.leg);
  }
  return "";
}

std::string latex_factor(const QTFactor& f) {
  return "1-q^{" + std::to_string(f.a) + "}t^{" + std::to_string(f.b) + "}";
}

std::string latex_frac(const std::optional<QTFactor>& num,
                       const std::optional<QTFactor>& den) {
  return "\\frac{" + (num ? latex_factor(*num) : std::string("1")) + "}{" +
         (den ? latex_factor(*den) : std::string("1")) + "}";
}

std::string ascii_frac(const std::optional<QTFactor>& num, bool num_added,
                       const std::optional<QTFactor>& den, bool den_added) {
  std::string out = num ? factor_label(*num) : "1";
  if (num_added) out += '*';
  out += '/';
  out += den ? factor_label(*den) : "1";
  if (den_added) out += '*';
  return out;
}

// Rows of the table with "i=k:" labels; empty positions shown as ".".
std::string labelled_ascii(const Grid& grid, std::size_t first_row) {
  std::vector<std::size_t> widths;
  for (const auto& row : grid) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      widths[k] = std::max(widths[k], row[k].size());
    }
  }
  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line = "i=" + std::to_string(first_row + r) + ":";
    for (std::size_t k = 0; k < grid[r].size(); ++k) {
      line += "  " + pad_right(grid[r][k].empty() ? "." : grid[r][k], widths[k]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

Grid empty_grid(const Partition& lambda) {
  Grid grid(lambda.length());
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    grid[i].assign(static_cast<std::size_t>(lambda.row(i + 1)), "");
  }
  return grid;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "ascii") return Format::ascii;
  if (text == "json") return Format::json;
  if (text == "latex") return Format::latex;
  throw DomainError("unknown format '" + std::string(text) + "'");
}

Overlay parse_overlay(std::string_view text) {
  if (text == "none") return Overlay::none;
  if (text == "content") return Overlay::content;
  if (text == "hook") return Overlay::hook;
  if (text == "arm-leg") return Overlay::arm_leg;
  throw DomainError("unknown overlay '" + std::string(text) + "'");
}

Stage parse_stage(std::string_view text) {
  if (text == "raw") return Stage::raw;
  if (text == "cancelled") return Stage::cancelled;
  if (text == "reversed") return Stage::reversed;
  if (text == "completed") return Stage::completed;
  throw DomainError("unknown stage '" + std::string(text) + "'");
}

std::string to_string(Overlay overlay) {
  switch (overlay) {
    case Overlay::none:
      return "none";
    case Overlay::content:
      return "content";
    case Overlay::hook:
      return "hook";
    case Overlay::arm_leg:
      return "arm-leg";
  }
  return "?";
}

std::string to_string(Stage stage) {
  switch (stage) {
    case Stage::raw:
      return "raw";
    case Stage::cancelled:
      return "cancelled";
    case Stage::reversed:
      return "reversed";
    case Stage::completed:
      return "completed";
  }
  return "?";
}

std::string factor_label(const QTFactor& f) {
  return "(1-q^" + std::to_string(f.a) + "t^" + std::to_string(f.b) + ")";
}

std::string shorthand_label(std::uint32_t r, int i, int j) {
  std::string alpha = "a";
  if (i < 10 && j < 10) {
    alpha += std::to_string(i) + std::to_string(j);
  } else {
    alpha += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  if (r == 0) return alpha;
  if (r == 1) return "K+" + alpha;
  return std::to_string(r) + "K+" + alpha;
}

std::string render_diagram(const Partition& lambda, Overlay overlay,
                           Format format) {
  if (format == Format::json) {
    Json rows = Json::array();
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
      Json row = Json::array();
      for (int j = 1; j <= lambda.row(i); ++j) {
        const BoxStats s = box_stats(lambda, {static_cast<int>(i), j});
        row.push_back({{"content", s.content},
                       {"hook", s.hook},
                       {"arm", s.arm},
                       {"leg", s.leg},
                       {"coarm", s.coarm},
                       {"coleg", s.coleg}});
      }
      rows.push_back(row);
    }
    return Json{{"lambda", to_json(lambda)},
                {"overlay", to_string(overlay)},
                {"rows", rows}}
               .dump(2) +
           "\n";
  }
  if (lambda.empty()) {
    return format == Format::latex ? "\\emph{empty diagram}\n"
                                   : "(empty diagram)\n";
  }
  Grid grid = empty_grid(lambda);
  for (const BoxCoord& b : boxes(lambda)) {
    grid[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(
        b.col - 1)] = box_value(lambda, b, overlay);
  }
  if (format == Format::latex) return latex_grid(grid, false);
  return ascii_grid(grid, true);
}

std::string render_table(const EllipticTable& table, Stage stage,
                         Format format) {
  const Partition& lambda = table.lambda;
  if (format == Format::json) {
    Json out{{"stage", to_string(stage)}};
    if (stage == Stage::raw || stage == Stage::cancelled) {
      out["table"] = to_json(table);
    } else if (stage == Stage::reversed) {
      Completion view;
      view.entries = reversed_table(table);
      out["table"] = to_json(view)["entries"];
    } else {
      out["table"] = to_json(elliptic_complete(table));
    }
    return out.dump(2) + "\n";
  }
  if (lambda.empty() ||
      (table.cells.empty() && (stage == Stage::raw || stage == Stage::cancelled))) {
    return "(no factors: every product is empty)\n";
  }

  Grid grid = empty_grid(lambda);
  auto at = [&grid](int row, int col) -> std::string& {
    return grid[static_cast<std::size_t>(row - 1)]
               [static_cast<std::size_t>(col - 1)];
  };
  std::string footer;
  if (stage == Stage::raw || stage == Stage::cancelled) {
    for (const auto& cell : table.cells) {
      if (stage == Stage::raw) {
        std::string text;
        for (int j : cell.js) {
          if (!text.empty()) text += ' ';
          text += shorthand_label(cell.r, cell.row, j);
        }
        at(cell.row, cell.col) = text;
      } else {
        const auto num = cell.cancelled.num.elements();
        const auto den = cell.cancelled.den.elements();
        const std::optional<QTFactor> n0 =
            num.empty() ? std::nullopt : std::optional(num.front());
        const std::optional<QTFactor> d0 =
            den.empty() ? std::nullopt : std::optional(den.front());
        at(cell.row, cell.col) = format == Format::latex
                                     ? latex_frac(n0, d0)
                                     : ascii_frac(n0, false, d0, false);
      }
    }
  } else {
    const Completion completion =
        stage == Stage::completed ? elliptic_complete(table) : Completion{};
    const std::vector<TableEntry> entries =
        stage == Stage::completed ? completion.entries : reversed_table(table);
    for (const auto& e : entries) {
      at(e.box.row, e.box.col) =
          format == Format::latex
              ? latex_frac(e.num, e.den)
              : ascii_frac(e.num, e.num_added, e.den, e.den_added);
    }
    if (stage == Stage::completed) {
      auto list = [](const FactorMultiset& m) {
        std::string s;
        for (const auto& f : m.elements()) s += " " + factor_label(f);
        return s.empty() ? std::string(" (none)") : s;
      };
      footer += "added numerators:  " + list(completion.added_num) + "\n";
      footer += "added denominators:" + list(completion.added_den) + "\n";
      footer += std::string("added numerators equal added denominators: ") +
                (completion.added_num == completion.added_den ? "yes" : "no") +
                "\n";
      if (format == Format::ascii) footer += "(* marks an added factor)\n";
    }
  }
  if (format == Format::latex) {
    std::string body = latex_grid(grid, true);
    std::istringstream lines(footer);
    for (std::string line; std::getline(lines, line);) body += "% " + line + "\n";
    return body;
  }
  return labelled_ascii(grid, 1) + footer;
}

}  // namespace hookbox::cli
