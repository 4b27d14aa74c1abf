import math
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase

import pytest

from coupledtops import MeasureKind
from example_scripts.catalog_config_example import catalog_config_example
from example_scripts.mixed_entropy_example import mixed_entropy_example
from example_scripts.phase_space_example import phase_space_example
from example_scripts.pure_entropy_example import pure_entropy_example
from example_scripts.rdm_histogram_example import rdm_histogram_example
from example_scripts.spacing_example import spacing_example
from example_scripts.sr_growth_example import sr_growth_example


@pytest.mark.integration
class ExampleScriptIntegrationTests(TestCase):
    def test_phase_space(self) -> None:
        sections = phase_space_example(k_values=(1.0, 6.0), grid_size=(5, 5), iterations=20)
        self.assertEqual(list(sections), [1.0, 6.0])
        for points in sections.values():
            self.assertEqual(points.theta.shape, (25 * 21,))

    def test_pure_entropy(self) -> None:
        results = pure_entropy_example(j=5.0, k_values=(1.0, 6.0), eps=0.1, n_max=30)
        for series in results.values():
            entropy = series[MeasureKind.VON_NEUMANN]
            self.assertEqual(len(entropy.values), 31)
            self.assertAlmostEqual(entropy.values[0], 0.0, places=10)
            self.assertTrue(((entropy.values >= 0.0) & (entropy.values <= math.log(11) + 1e-12)).all())

    def test_mixed_entropy(self) -> None:
        results = mixed_entropy_example(j=2.0, n_max=10)
        for series in results.values():
            self.assertAlmostEqual(series.values[0], 0.0, places=10)
            self.assertTrue((series.values >= -1e-10).all())

    def test_sr_growth(self) -> None:
        results = sr_growth_example(j=4.0, eps_values=(0.01, 0.1), n_max=20)
        for simulated, predicted in results.values():
            self.assertEqual(len(simulated.values), 21)
            self.assertEqual(len(predicted.values), 20)

    def test_rdm_histogram(self) -> None:
        hist = rdm_histogram_example(j=4.0, n_start=20, n_stop=100, sample_every=5, bins=12)
        self.assertEqual(hist.total, 17 * 9)
        self.assertEqual(int(hist.counts.sum()), hist.total)

    def test_spacing(self) -> None:
        hist = spacing_example(j=3.0)
        self.assertEqual(hist.spacings.size, 49)
        self.assertAlmostEqual(hist.mean_spacing, 1.0, places=10)
        self.assertEqual(int(hist.counts.sum()), 49)

    def test_catalog_configs(self) -> None:
        with TemporaryDirectory() as directory:
            pure = catalog_config_example("fig2a", Path(directory) / "fig2a", j=4.0, n_max=10)
            self.assertEqual(len(pure), 4)
            for frame in pure.values():
                self.assertEqual(list(frame["n"]), list(range(11)))
            section = catalog_config_example("fig1a", Path(directory) / "fig1a")
            self.assertEqual(len(section["phase_space_k1.csv"]), 400 * 201)
            overlay = catalog_config_example("fig5", Path(directory) / "fig5", j=4.0, n_max=10)
            self.assertEqual(len(overlay), 3)
            self.assertTrue((Path(directory) / "fig5" / "plot_results.py").is_file())
