"""Smoke tests for the python bindings: one pass over every exposed surface.

Runnable directly (python3 test_smoke.py) or under pytest.
"""

import math

import onebitcap as obc


def test_version_and_scalars():
    assert isinstance(obc.__version__, str) and obc.__version__
    assert obc.q_function(0.0) == 0.5
    assert obc.binary_entropy(0.5) == 1.0
    assert abs(obc.binary_entropy(0.25) - 0.8112781244591328) < 1e-15


def test_constellation():
    cons = obc.Constellation.enumerate(2)
    assert cons.subset_count == 20
    assert cons.dims == 4
    first = cons.subset(0)
    assert (first.u, first.k) == (1, 1)
    assert list(first.representative) == [-1, 0, 0, 0]
    members = first.members()
    assert len(members) == 4
    assert sorted(tuple(m) for m in members) == sorted(
        [(-1, 0, 0, 0), (1, 0, 0, 0), (0, 0, -1, 0), (0, 0, 1, 0)]
    )
    orbit = cons.orbit_of([0, 1, 0, 0])
    assert (orbit.u, orbit.k) == (1, 2)
    assert obc.power_level([1, 0, -1, 0]) == 2
    rotated = obc.rotate([1, 0, 0, 0])
    assert list(rotated) == [0, 0, 1, 0]


def test_channel_lifting():
    channel = obc.realify([1 + 2j])
    assert list(channel.row1) == [1.0, -2.0]
    assert list(channel.row2) == [2.0, 1.0]
    assert obc.to_complex(channel) == [1 + 2j]
    assert abs(obc.subset_entropy(channel, [1, 0], 1e-9)) < 1e-12


def test_capacity_paths_agree():
    cons = obc.Constellation.enumerate(1)
    closed = obc.siso_capacity([2 + 2j], 9.0, 2.0)
    assert closed.case_tag == obc.CapacityCase.x2_only
    assert abs(closed.capacity_bits - 0.807249587097) < 1e-9

    lp = obc.miso_capacity(obc.realify([2 + 2j]), 9.0, 2.0, cons)
    assert abs(lp.capacity_bits - closed.capacity_bits) < 1e-12
    assert len(lp.distribution.masses) == 1
    assert (lp.distribution.masses[0].u, lp.distribution.masses[0].k) == (2, 1)

    full = obc.capacity_full_power(obc.realify([2 + 2j]), 9.0, cons)
    assert abs(full.capacity_bits - closed.capacity_bits) < 1e-12

    dist = obc.InputDistribution()
    dist.masses = [obc.SubsetMass(2, 1, 1.0)]
    mi = obc.mi_bruteforce(
        obc.realify([2 + 2j]), obc.dense_distribution(cons, dist), 9.0
    )
    assert abs(mi - closed.capacity_bits) < 1e-12

    law = obc.output_distribution(
        obc.realify([2 + 2j]), obc.dense_distribution(cons, dist), 9.0
    )
    assert all(abs(p - 0.25) < 1e-12 for p in law)


def test_baselines():
    assert abs(obc.feedback_bits(4, obc.CodebookMode.full) - math.log2(1640)) < 1e-12
    assert obc.feedback_bits(4, obc.CodebookMode.dominant) == 6.0
    assert obc.capacity_infinite_dacs([1 + 1j], 1e-9) > 1.999
    assert obc.dac_loss_siso([1 + 1j], 1.0) >= 0.0
    choice = obc.phase_threshold_rate([1 + 1j], 1.0)
    assert choice.chosen_set == obc.PhaseChoice.x1
    bounds = obc.power_loss_bounds()
    assert abs(bounds.worst_case_db - 6.9897) < 0.02
    assert abs(bounds.ergodic_db - 3.215) < 0.02


def test_sweep_and_training():
    cfg = obc.SweepConfig()
    cfg.num_antennas = 1
    cfg.snr_grid_db = [0.0, 10.0]
    cfg.num_channels = 20
    cfg.seed = 11
    cfg.variants = [obc.SweepVariant.onebit_both_csit]
    result = obc.ergodic_sweep(cfg)
    again = obc.ergodic_sweep(cfg)
    assert [p.mean_bits for p in result.points] == [p.mean_bits for p in again.points]
    csv = obc.sweep_csv(result)
    assert csv.startswith("variant,snr_db,mean_bits,stderr_bits,num_channels,seed\n")
    assert len(csv.strip().split("\n")) == 3

    rng = obc.Xoshiro256(5)
    h = obc.sample_channel(2, rng)
    assert len(h) == 2
    cons = obc.Constellation.enumerate(2)
    outcome = obc.full_training(obc.realify(h), 1.0, cons, 50, rng)
    assert outcome.training_length == 1000
    assert len(outcome.estimates) == 20
    word = obc.encode_feedback(
        cons, obc.CodebookMode.full, outcome.selected_u, outcome.selected_k
    )
    assert obc.decode_feedback(cons, obc.CodebookMode.full, word) == (
        outcome.selected_u,
        outcome.selected_k,
    )
    rate = obc.achieved_rate(
        obc.realify(h), 1.0, cons, outcome.selected_u, outcome.selected_k
    )
    best = obc.capacity_full_power(obc.realify(h), 1.0, cons)
    assert rate <= best.capacity_bits + 1e-12

    tcfg = obc.TrainingSweepConfig()
    tcfg.num_antennas = 1
    tcfg.snr_grid_db = [5.0]
    tcfg.num_channels = 10
    tcfg.seed = 2
    tcfg.mode = obc.CodebookMode.dominant
    tcfg.repetitions = 4
    tres = obc.ergodic_training_sweep(tcfg)
    assert len(tres.points) == 1
    assert tres.points[0].mean_rate_bits <= tres.points[0].mean_capacity_bits + 1e-12
    assert obc.training_csv(tres).startswith("mode,L,snr_db,")


def test_errors_surface_as_python_exceptions():
    try:
        obc.siso_capacity([1 + 1j], 1.0, 0.5)
    except ValueError:
        pass
    else:
        raise AssertionError("budget below one must raise")

    try:
        obc.binary_entropy(1.5)
    except ValueError:
        pass
    else:
        raise AssertionError("probability above one must raise")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
    print("python smoke tests passed")
