#pragma once

#include <string>
#include <vector>

#include "pedalgeom/geom.hpp"

namespace pedalgeom::svg {

/// Line-art canvas organized in named layers, each rendered as one <g>.
/// World y points up; coordinates are written with nine significant digits.
class Canvas {
 public:
  struct Style {
    std::string stroke = "#000000";
    std::string fill = "none";
    double width = 1.5;
    bool dashed = false;
  };

  /// Selects (creating on first use) the layer further calls draw into.
  Canvas& layer(const std::string& id);

  Canvas& polygon(const Polygon& p, const Style& style);
  Canvas& segment(Point a, Point b, const Style& style);
  /// Infinite line, clipped to the final view box.
  Canvas& line(const DirectedLine& l, const Style& style);
  Canvas& point(Point p, const Style& style, const std::string& label = {});

  std::vector<std::string> layer_ids() const;
  std::string render() const;

 private:
  enum class Kind { Polygon, Segment, Line, Point };
  struct Item {
    Kind kind;
    std::vector<Point> pts;
    Vec2 dir;
    Style style;
    std::string label;
  };
  struct Layer {
    std::string id;
    std::vector<Item> items;
  };

  Layer& current();

  std::vector<Layer> layers_;
  std::size_t active_ = 0;
};

}  // namespace pedalgeom::svg
