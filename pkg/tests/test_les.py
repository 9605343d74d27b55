from quivertilt.les import les_bookkeeping


def _all_conflations(ctx):
    for c in range(ctx.n_objects):
        for a in range(ctx.n_objects):
            for coords in ctx.all_class_coords(c, a, include_zero=True):
                yield ctx.realize(c, a, coords)


def test_exact_context_sequences(exact_contexts):
    for name in ("a2", "dual_numbers"):
        ctx = exact_contexts[name]
        for conf in _all_conflations(ctx):
            for x in range(ctx.n_objects):
                ok, detail = les_bookkeeping(ctx, conf, x, depth=4)
                assert ok, (name, detail)


def test_stable_context_sequences(stable_contexts):
    for name in ("dual_numbers", "nak22"):
        ctx = stable_contexts[name]
        for conf in _all_conflations(ctx):
            for x in range(ctx.n_objects):
                ok, detail = les_bookkeeping(ctx, conf, x, depth=4)
                assert ok, (name, detail)
