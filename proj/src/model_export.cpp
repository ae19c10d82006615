#include <algorithm>
#include <charconv>
#include <sstream>

#include "moap/model.hpp"

namespace moap {

namespace {

std::string sanitize(const std::string& id) {
  std::string out = id;
  for (char& c : out)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') c = '_';
  return out;
}

std::string var_name(const Instance& inst, int o) {
  return "x_" + sanitize(inst.offers[static_cast<std::size_t>(o)].id);
}

// Shortest round-trip decimal representation.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string export_lp(const IlpModel& model) {
  const Instance& inst = *model.instance;
  std::ostringstream out;
  out << "\\ MOAP " << (model.classes ? "class" : "plain") << " model, "
      << (model.formulation == Formulation::Clique ? "clique" : "edge") << " formulation\n";
  out << "Minimize\n obj:";
  for (int o = 0; o < inst.num_offers(); ++o) {
    const double c = inst.offers[static_cast<std::size_t>(o)].cost;
    out << (o == 0 ? " " : " + ") << num(c) << " " << var_name(inst, o);
    if ((o + 1) % 8 == 0) out << "\n     ";
  }
  out << "\nSubject To\n";
  for (const auto& d : inst.demands) {
    out << " d_" << sanitize(d.id) << ":";
    for (std::size_t i = 0; i < d.offers.size(); ++i)
      out << (i == 0 ? " " : " + ") << var_name(inst, d.offers[i]);
    out << " = 1\n";
  }
  for (const auto& row : model.capacity) {
    out << " " << sanitize(row.name) << ":";
    for (std::size_t i = 0; i < row.offers.size(); ++i)
      out << (i == 0 ? " " : " + ") << var_name(inst, row.offers[i]);
    out << " <= " << row.rhs << "\n";
  }
  out << "Binaries\n";
  for (int o = 0; o < inst.num_offers(); ++o) {
    out << " " << var_name(inst, o);
    if ((o + 1) % 8 == 0) out << "\n";
  }
  if (inst.num_offers() % 8 != 0) out << "\n";
  out << "End\n";
  return out.str();
}

std::string export_mps(const IlpModel& model) {
  const Instance& inst = *model.instance;
  std::ostringstream out;

  auto field = [](const std::string& s, std::size_t width) {
    std::string f = s;
    while (f.size() < width) f.push_back(' ');
    return f;
  };

  out << "NAME          MOAP\n";
  out << "ROWS\n";
  out << " N  COST\n";
  std::vector<std::string> row_names;
  for (const auto& d : inst.demands) {
    row_names.push_back("d_" + sanitize(d.id));
    out << " E  " << row_names.back() << "\n";
  }
  for (const auto& row : model.capacity) {
    row_names.push_back(sanitize(row.name));
    out << " L  " << row_names.back() << "\n";
  }

  // Column-major coefficients; all variables are binary.
  out << "COLUMNS\n";
  out << "    MARKER                 'MARKER'                 'INTORG'\n";
  for (int d = 0; d < inst.num_demands(); ++d) {
    for (int o : inst.demands[static_cast<std::size_t>(d)].offers) {
      const std::string col = var_name(inst, o);
      out << "    " << field(col, 10) << field("COST", 10)
          << num(inst.offers[static_cast<std::size_t>(o)].cost) << "\n";
      out << "    " << field(col, 10) << field("d_" + sanitize(inst.demands[static_cast<std::size_t>(d)].id), 10)
          << "1\n";
      for (int r : model.rows_of_offer[static_cast<std::size_t>(o)])
        out << "    " << field(col, 10)
            << field(sanitize(model.capacity[static_cast<std::size_t>(r)].name), 10) << "1\n";
    }
  }
  out << "    MARKER                 'MARKER'                 'INTEND'\n";

  out << "RHS\n";
  for (const auto& d : inst.demands)
    out << "    " << field("RHS", 10) << field("d_" + sanitize(d.id), 10) << "1\n";
  for (const auto& row : model.capacity)
    out << "    " << field("RHS", 10) << field(sanitize(row.name), 10) << row.rhs << "\n";

  out << "BOUNDS\n";
  for (int o = 0; o < inst.num_offers(); ++o)
    out << " BV " << field("BND", 10) << var_name(inst, o) << "\n";
  out << "ENDATA\n";
  return out.str();
}

}  // namespace moap
