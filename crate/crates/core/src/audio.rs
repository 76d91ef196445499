//! Mono waveform type and 16-bit PCM WAV I/O.

use std::path::Path;

use crate::error::{CoreError, Result};

/// A mono sample sequence with its sample rate. Samples are dimensionless
/// amplitudes, nominally in [-1, 1]; values outside that range are legal in
/// memory (e.g. after RMS normalization) but are clamped when written to
/// 16-bit PCM.
#[derive(Debug, Clone, PartialEq)]
pub struct Waveform {
    samples: Vec<f64>,
    sample_rate: u32,
}

impl Waveform {
    pub fn new(samples: Vec<f64>, sample_rate: u32) -> Result<Self> {
        if samples.is_empty() {
            return Err(CoreError::InvalidAudio("waveform must have length >= 1".into()));
        }
        if sample_rate == 0 {
            return Err(CoreError::InvalidAudio("sample_rate must be > 0".into()));
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(CoreError::InvalidAudio(format!(
                "non-finite sample at index {i}"
            )));
        }
        Ok(Self { samples, sample_rate })
    }

    /// All-zero waveform of the given length.
    pub fn zeros(len: usize, sample_rate: u32) -> Result<Self> {
        Self::new(vec![0.0; len], sample_rate)
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn sample_rate(&self) -> u32 {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_seconds(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }

    /// Mean power (mean of squared samples).
    pub fn power(&self) -> f64 {
        self.samples.iter().map(|v| v * v).sum::<f64>() / self.samples.len() as f64
    }

    pub fn rms(&self) -> f64 {
        self.power().sqrt()
    }

    pub fn peak(&self) -> f64 {
        self.samples.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    /// Multiply every sample by `gain`.
    pub fn scaled(&self, gain: f64) -> Result<Self> {
        Self::new(self.samples.iter().map(|v| v * gain).collect(), self.sample_rate)
    }

    /// Quantize samples to the 16-bit PCM grid (clamping to full scale).
    /// Used by the simulator so that a mixture written to disk is exactly the
    /// sample-wise sum of its sources after their own quantization.
    pub fn quantized_i16(&self) -> Self {
        let samples = self
            .samples
            .iter()
            .map(|v| i16_from_f64(*v) as f64 / 32768.0)
            .collect();
        Self { samples, sample_rate: self.sample_rate }
    }

    pub fn write_wav(&self, path: &Path) -> Result<()> {
        let spec = hound::WavSpec {
            channels: 1,
            sample_rate: self.sample_rate,
            bits_per_sample: 16,
            sample_format: hound::SampleFormat::Int,
        };
        let mut writer = hound::WavWriter::create(path, spec)?;
        for v in &self.samples {
            writer.write_sample(i16_from_f64(*v))?;
        }
        writer.finalize()?;
        Ok(())
    }

    pub fn read_wav(path: &Path) -> Result<Self> {
        let mut reader = hound::WavReader::open(path)?;
        let spec = reader.spec();
        if spec.channels != 1 {
            return Err(CoreError::InvalidAudio(format!(
                "{}: expected mono, got {} channels",
                path.display(),
                spec.channels
            )));
        }
        let samples: Vec<f64> = match (spec.sample_format, spec.bits_per_sample) {
            (hound::SampleFormat::Int, 16) => reader
                .samples::<i16>()
                .map(|s| s.map(|v| v as f64 / 32768.0))
                .collect::<std::result::Result<_, _>>()?,
            (hound::SampleFormat::Float, 32) => reader
                .samples::<f32>()
                .map(|s| s.map(|v| v as f64))
                .collect::<std::result::Result<_, _>>()?,
            (fmt, bits) => {
                return Err(CoreError::InvalidAudio(format!(
                    "{}: unsupported wav format {fmt:?}/{bits} bit",
                    path.display()
                )))
            }
        };
        Self::new(samples, spec.sample_rate)
    }
}

fn i16_from_f64(v: f64) -> i16 {
    let scaled = (v * 32768.0).round();
    scaled.clamp(i16::MIN as f64, i16::MAX as f64) as i16
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_nonfinite() {
        assert!(Waveform::new(vec![], 8000).is_err());
        assert!(Waveform::new(vec![0.0, f64::NAN], 8000).is_err());
        assert!(Waveform::new(vec![0.0], 0).is_err());
    }

    #[test]
    fn wav_roundtrip_is_exact_on_the_pcm_grid() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.wav");
        let w = Waveform::new(vec![0.5, -0.25, 0.125, 0.0], 8000)
            .unwrap()
            .quantized_i16();
        w.write_wav(&path).unwrap();
        let r = Waveform::read_wav(&path).unwrap();
        assert_eq!(r.sample_rate(), 8000);
        assert_eq!(r.samples(), w.samples());
    }

    #[test]
    fn power_and_rms() {
        let w = Waveform::new(vec![1.0, 0.0, 0.0, 0.0], 16000).unwrap();
        assert!((w.power() - 0.25).abs() < 1e-12);
        assert!((w.rms() - 0.5).abs() < 1e-12);
    }
}
