#pragma once

#include "lines.hpp"
