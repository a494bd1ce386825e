#include "endobrace/cayley_io.hpp"

#include <fstream>
#include <sstream>

namespace endobrace {

GroupPtr read_group(std::istream& in, const std::string& name, const Limits& limits) {
  std::string word;
  if (!(in >> word) || word != "order") {
    throw input_error("Cayley file: expected leading 'order n' line");
  }
  int n = 0;
  if (!(in >> n) || n < 1) throw input_error("Cayley file: bad order");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (auto& v : table) {
    if (!(in >> v)) throw input_error("Cayley file: table truncated");
  }
  return Group::from_table(name, n, std::move(table), limits);
}

GroupPtr load_group_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open group file '" + path + "'");
  return read_group(in, path, limits);
}

void write_group(std::ostream& out, const Group& g) {
  const int n = g.order();
  out << "order " << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << "\n";
  }
}

std::string group_to_text(const Group& g) {
  std::ostringstream os;
  write_group(os, g);
  return os.str();
}

std::vector<int> read_image_table(std::istream& in, int order) {
  std::vector<int> images(static_cast<std::size_t>(order));
  for (auto& v : images) {
    if (!(in >> v)) throw input_error("endomorphism file: expected " + std::to_string(order) +
                                      " image entries");
  }
  return images;
}

std::vector<int> load_image_table_file(const std::string& path, int order) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open endomorphism file '" + path + "'");
  return read_image_table(in, order);
}

GroupMap parse_generator_endo(GroupPtr g, const std::string& text) {
  std::string body = text;
  if (body.rfind("gen:", 0) == 0) body = body.substr(4);
  std::vector<int> gens, imgs;
  std::istringstream parts(body);
  std::string item;
  while (std::getline(parts, item, ',')) {
    std::size_t arrow = item.find("->");
    std::size_t skip = 2;
    if (arrow == std::string::npos) {
      arrow = item.find("→");
      skip = 3;
    }
    if (arrow == std::string::npos) {
      throw input_error("generator form: expected 'g->x' in '" + item + "'");
    }
    try {
      gens.push_back(std::stoi(item.substr(0, arrow)));
      imgs.push_back(std::stoi(item.substr(arrow + skip)));
    } catch (const std::exception&) {
      throw input_error("generator form: bad number in '" + item + "'");
    }
  }
  if (gens.empty()) throw input_error("generator form: no assignments given");
  for (int x : gens) g->check_element(x);
  for (int x : imgs) g->check_element(x);

  auto span = generated_subgroup(g, gens);
  if (span.order() != g->order()) {
    throw input_error("generator form: the listed elements do not generate the group");
  }
  // Extend along a breadth-first spanning tree, then let make_homomorphism
  // run the full pair check.
  const int n = g->order();
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  images[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = g->mul(x, gens[i]);
      if (images[y] < 0) {
        images[y] = g->mul(images[x], imgs[i]);
        queue.push_back(y);
      }
    }
  }
  return make_homomorphism(g, g, std::move(images));
}

}  // namespace endobrace
