#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "mrispeech/core/signal.hpp"

namespace mrispeech {

enum class WavEncoding { pcm16, float32 };

const char* to_string(WavEncoding e);
/// Accepts "pcm16" and "float32"; throws ParameterError otherwise.
WavEncoding parse_wav_encoding(const std::string& name);

/// Reads one channel of a RIFF/WAVE file. 16-bit PCM is scaled by 1/32768,
/// 32-bit IEEE float is taken as-is.
SampledSignal read_wav(const std::filesystem::path& path, std::size_t channel = 0);

/// Number of interleaved channels declared in the fmt chunk.
std::size_t wav_channel_count(const std::filesystem::path& path);

/// Writes a mono file. pcm16 clamps to [-1, 1] and rounds to the nearest
/// step of 1/32768 (positive full scale saturates at 32767).
void write_wav(const SampledSignal& signal, const std::filesystem::path& path,
               WavEncoding encoding = WavEncoding::float32);

}  // namespace mrispeech
