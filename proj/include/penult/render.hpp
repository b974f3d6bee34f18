#pragma once

#include <string>

#include "penult/board.hpp"

namespace penult {

// ascii: header "<game> <n>" then one row per line, '#' occupied / '.' empty.
// Dots-and-boxes boards draw the dot lattice with '-' / '|' for taken edges.
std::string render_ascii(const Board& b);
std::string render_svg(const Board& b);
std::string render_tikz(const Board& b);

Board parse_ascii(const std::string& text);  // inverse of render_ascii

// {"game": ..., "n": ..., "cells": [[r,c],...]} with cells sorted row-major;
// db boards use "edges": [["h"|"v",r,c],...] in universe order.
std::string board_to_json(const Board& b);
Board board_from_json(const std::string& text);

// Accepts either format (JSON if the first non-space byte is '{').
Board parse_board(const std::string& text);

}  // namespace penult
