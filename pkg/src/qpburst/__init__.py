"""qpburst: quasiparticle-burst modelling and particle-impact reconstruction
for superconducting transmon qubit chips.

Submodules
----------
physics   -- relaxation-probability model, Rothwarf-Taylor dynamics
readout   -- two-state readout chain simulation and synthetic impact sources
waveform  -- binning, pulse features, quality cuts, average pulses
bayes     -- binomial-likelihood Metropolis-Hastings inference
recon     -- phonon efficiency model, vertex fits, spectra
pipeline  -- file formats and the simulate/process/calibrate/fit/reconstruct chain
"""

from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
