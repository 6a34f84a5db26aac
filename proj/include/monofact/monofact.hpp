#pragma once
// Umbrella header: the whole toolkit in one include.

#include <monofact/version.hpp>
#include <monofact/f2.hpp>
#include <monofact/curves.hpp>
#include <monofact/humphries.hpp>
#include <monofact/words.hpp>
#include <monofact/distinguish.hpp>
#include <monofact/alexinv.hpp>
#include <monofact/io.hpp>
#include <monofact/checks.hpp>
