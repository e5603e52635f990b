import numpy as np
import pytest

from conftest import fd_gradient, rel_err
from mlfm import (Tape, Tensor, add, backward, channel_affine, concat_channels,
                  conv2d, linear, mean_hw, mul, pointwise, pool2d, relu,
                  sgd_step, sigmoid, softmax_cross_entropy, split_channels,
                  sum_all, tanh, upsample_nearest2)
from mlfm.tensor import ShapeError, TapeError


def t64(a):
    return Tensor(np.asarray(a, dtype=np.float64))


class TestConv2d:
    def test_sum_kernel(self):
        x = t64([[[[1.0, 2.0], [3.0, 4.0]]]])
        w = t64(np.ones((1, 1, 2, 2)))
        y = conv2d(x, w)
        assert y.data.reshape(-1) == pytest.approx([10.0])

    def test_identity_kernel_bitwise(self, rng):
        x = Tensor(rng.standard_normal((2, 3, 5, 7)))
        w = np.zeros((3, 3, 1, 1), dtype=np.float64)
        for c in range(3):
            w[c, c, 0, 0] = 1.0
        y = conv2d(x, Tensor(w))
        assert np.array_equal(y.data, x.data)

    def test_stride_pad_shape(self, rng):
        x = Tensor(rng.standard_normal((1, 2, 8, 8)).astype(np.float32))
        w = Tensor(rng.standard_normal((4, 2, 4, 4)).astype(np.float32))
        assert conv2d(x, w, stride=2, pad=1).shape == (1, 4, 4, 4)

    def test_geometry_error_names_dims(self):
        x = t64(np.zeros((1, 1, 5, 5)))
        w = t64(np.zeros((1, 1, 2, 2)))
        with pytest.raises(ShapeError, match="stride"):
            conv2d(x, w, stride=2)

    def test_channel_mismatch(self):
        with pytest.raises(ShapeError, match="C=2"):
            conv2d(t64(np.zeros((1, 2, 4, 4))), t64(np.zeros((1, 3, 3, 3))))

    def test_gradient_matches_fd(self, rng):
        xd = rng.standard_normal((1, 2, 6, 6))
        wd = rng.standard_normal((3, 2, 3, 3))
        bd = rng.standard_normal(3)

        def loss(xa, wa, ba):
            y = kernels_free_conv(xa, wa, ba)
            return y.sum()

        def kernels_free_conv(xa, wa, ba):
            x, w, b = t64(xa), t64(wa), t64(ba)
            return conv2d(x, w, b, stride=1, pad=1).data

        fd = fd_gradient(loss, [xd, wd, bd])
        with Tape() as tape:
            x, w, b = t64(xd), t64(wd), t64(bd)
            for p in (x, w, b):
                tape.watch(p)
            out = sum_all(conv2d(x, w, b, stride=1, pad=1))
        grads = backward(out, tape)
        assert rel_err(grads[x.grad_id], fd[0]) < 1e-5
        assert rel_err(grads[w.grad_id], fd[1]) < 1e-5
        assert rel_err(grads[b.grad_id], fd[2]) < 1e-5


class TestPool2d:
    def test_max(self):
        y = pool2d(t64([[[[1.0, 2.0], [3.0, 4.0]]]]), "max")
        assert y.data.reshape(-1) == pytest.approx([4.0])

    def test_avg(self):
        y = pool2d(t64([[[[1.0, 2.0], [3.0, 4.0]]]]), "avg")
        assert y.data.reshape(-1) == pytest.approx([2.5])

    @pytest.mark.parametrize("kind", ["max", "avg"])
    def test_constant_image(self, kind):
        x = t64(np.full((1, 2, 6, 6), 3.25))
        y = pool2d(x, kind)
        assert y.shape == (1, 2, 3, 3)
        assert np.allclose(y.data, 3.25)

    def test_divisibility_error(self):
        with pytest.raises(ShapeError):
            pool2d(t64(np.zeros((1, 1, 5, 6))), "max")

    def test_max_tie_first_in_scan_order(self):
        x = t64(np.zeros((1, 1, 2, 2)))
        with Tape() as tape:
            xt = tape.watch(t64(np.zeros((1, 1, 2, 2))))
            out = sum_all(pool2d(xt, "max"))
        g = backward(out, tape)[xt.grad_id]
        assert g.reshape(-1).tolist() == [1.0, 0.0, 0.0, 0.0]
        del x

    @pytest.mark.parametrize("kind", ["max", "avg"])
    def test_gradient_matches_fd(self, rng, kind):
        xd = rng.standard_normal((1, 2, 4, 4))
        fd = fd_gradient(lambda a: pool2d(t64(a), kind).data.sum() * 2.0, [xd])
        with Tape() as tape:
            x = tape.watch(t64(xd))
            out = sum_all(add(pool2d(x, kind), pool2d(x, kind)))
        g = backward(out, tape)[x.grad_id]
        assert rel_err(g, fd[0]) < 1e-6


class TestPointwiseBinary:
    def test_sigmoid_zero(self):
        assert sigmoid(t64([0.0])).item() == pytest.approx(0.5)

    def test_add_identity(self, rng):
        x = Tensor(rng.standard_normal((3, 4)))
        assert np.array_equal(add(x, Tensor(np.zeros_like(x.data))).data, x.data)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            add(t64(np.zeros((2, 2))), t64(np.zeros((2, 3))))

    def test_dtype_mismatch(self):
        with pytest.raises(ShapeError, match="dtype"):
            add(Tensor(np.zeros(3, dtype=np.float32)), t64(np.zeros(3)))

    @pytest.mark.parametrize("name,tol", [("tanh", 1e-6), ("sigmoid", 1e-6), ("relu", 1e-5)])
    def test_pointwise_gradients(self, rng, name, tol):
        xd = rng.standard_normal(24).reshape(4, 6) + 0.1   # keep relu off the kink
        fd = fd_gradient(lambda a: pointwise(t64(a), name).data.sum(), [xd])
        with Tape() as tape:
            x = tape.watch(t64(xd))
            out = sum_all(pointwise(x, name))
        g = backward(out, tape)[x.grad_id]
        assert rel_err(g, fd[0]) < tol

    def test_mul_gradient(self, rng):
        a, b = rng.standard_normal((2, 3)), rng.standard_normal((2, 3))
        with Tape() as tape:
            x, y = tape.watch(t64(a)), tape.watch(t64(b))
            out = sum_all(mul(x, y))
        g = backward(out, tape)
        assert np.allclose(g[x.grad_id], b) and np.allclose(g[y.grad_id], a)


class TestSoftmaxCrossEntropy:
    def test_uniform_logits(self):
        loss = softmax_cross_entropy(t64([[0.0, 0.0]]), [0])
        assert loss.item() == pytest.approx(np.log(2.0), abs=1e-12)

    def test_saturated_no_overflow(self):
        loss = softmax_cross_entropy(t64([[50.0, -50.0]]), [0])
        assert 0.0 <= loss.item() < 1e-12

    def test_label_out_of_range(self):
        with pytest.raises(ValueError, match="label"):
            softmax_cross_entropy(t64([[0.0, 0.0]]), [2])

    def test_gradient_is_softmax_minus_onehot(self, rng):
        ld = rng.standard_normal((4, 5))
        labels = np.array([0, 3, 2, 1])
        with Tape() as tape:
            lg = tape.watch(t64(ld))
            loss = softmax_cross_entropy(lg, labels)
        g = backward(loss, tape)[lg.grad_id]
        p = np.exp(ld - ld.max(axis=1, keepdims=True))
        p /= p.sum(axis=1, keepdims=True)
        p[np.arange(4), labels] -= 1.0
        assert np.allclose(g, p / 4.0, atol=1e-12)
        fd = fd_gradient(lambda a: float(softmax_cross_entropy(t64(a), labels).item()), [ld])
        assert rel_err(g, fd[0], floor=1e-6) < 1e-5

    def test_spatial_logits(self, rng):
        ld = rng.standard_normal((2, 3, 4, 4))
        labels = rng.integers(0, 3, size=(2, 4, 4))
        loss = softmax_cross_entropy(t64(ld), labels)
        flat = ld.transpose(0, 2, 3, 1).reshape(-1, 3)
        ref = []
        for row, lab in zip(flat, labels.reshape(-1)):
            z = row - row.max()
            ref.append(np.log(np.exp(z).sum()) - z[lab])
        assert loss.item() == pytest.approx(np.mean(ref), abs=1e-12)


class TestBackward:
    def test_sum_of_squares(self, rng):
        xd = rng.standard_normal((3, 3))
        with Tape() as tape:
            x = tape.watch(t64(xd))
            out = sum_all(mul(x, x))
        g = backward(out, tape)[x.grad_id]
        assert np.allclose(g, 2 * xd, atol=1e-12)

    def test_fanout_accumulation(self):
        with Tape() as tape:
            x = tape.watch(t64(np.ones((2, 2))))
            out = sum_all(add(x, x))
        g = backward(out, tape)[x.grad_id]
        assert np.array_equal(g, 2 * np.ones((2, 2)))

    def test_non_scalar_loss_rejected(self):
        with Tape() as tape:
            x = tape.watch(t64(np.ones(3)))
            y = add(x, x)
        with pytest.raises(TapeError, match="scalar"):
            backward(y, tape)

    def test_foreign_tape_rejected(self):
        with Tape() as tape:
            x = tape.watch(t64(np.ones(1)))
            loss = sum_all(x)
        other = Tape()
        with pytest.raises(TapeError, match="tape"):
            backward(loss, other)

    def test_untracked_tensor_gets_no_gradient(self):
        with Tape() as tape:
            x = tape.watch(t64(np.ones(2)))
            c = t64(np.full(2, 5.0))     # constant, never watched
            out = sum_all(mul(x, c))
        grads = backward(out, tape)
        assert c.grad_id is None and x.grad_id in grads


class TestStructureOps:
    def test_linear_gradients(self, rng):
        xd, wd, bd = rng.standard_normal((3, 4)), rng.standard_normal((4, 2)), rng.standard_normal(2)
        fd = fd_gradient(lambda a, b, c: (a @ b + c).sum(), [xd, wd, bd])
        with Tape() as tape:
            x, w, b = (tape.watch(t64(v)) for v in (xd, wd, bd))
            out = sum_all(linear(x, w, b))
        g = backward(out, tape)
        for p, r in zip((x, w, b), fd):
            assert rel_err(g[p.grad_id], r) < 1e-6

    def test_channel_affine_gradients(self, rng):
        xd = rng.standard_normal((2, 3, 4, 4))
        gd, bd = rng.standard_normal(3), rng.standard_normal(3)
        fd = fd_gradient(
            lambda a, g_, b_: (a * g_[None, :, None, None] + b_[None, :, None, None]).sum() ** 2 / 2,
            [xd, gd, bd])
        with Tape() as tape:
            x, gm, bt = (tape.watch(t64(v)) for v in (xd, gd, bd))
            y = sum_all(channel_affine(x, gm, bt))
            out = mul(y, y)
            out = sum_all(scale_half(out))
        g = backward(out, tape)
        for p, r in zip((x, gm, bt), fd):
            assert rel_err(g[p.grad_id], r, floor=1e-6) < 1e-5

    def test_concat_split_roundtrip(self, rng):
        a = Tensor(rng.standard_normal((2, 3, 4, 4)))
        b = Tensor(rng.standard_normal((2, 5, 4, 4)))
        cat = concat_channels([a, b])
        pa, pb = split_channels(cat, [3, 5])
        assert np.array_equal(pa.data, a.data) and np.array_equal(pb.data, b.data)

    def test_split_gradient_fills_missing_bands(self, rng):
        xd = rng.standard_normal((1, 4, 2, 2))
        with Tape() as tape:
            x = tape.watch(t64(xd))
            a, b = split_channels(x, [1, 3])
            out = sum_all(a)       # gradient flows through one branch only
        g = backward(out, tape)[x.grad_id]
        assert np.allclose(g[:, :1], 1.0) and np.allclose(g[:, 1:], 0.0)
        del b

    def test_upsample_nearest(self, rng):
        xd = rng.standard_normal((1, 2, 3, 3))
        y = upsample_nearest2(t64(xd))
        assert y.shape == (1, 2, 6, 6)
        assert np.array_equal(y.data[:, :, ::2, ::2], xd)
        with Tape() as tape:
            x = tape.watch(t64(xd))
            out = sum_all(upsample_nearest2(x))
        g = backward(out, tape)[x.grad_id]
        assert np.allclose(g, 4.0)

    def test_mean_hw(self, rng):
        xd = rng.standard_normal((2, 3, 4, 4))
        y = mean_hw(t64(xd))
        assert np.allclose(y.data, xd.mean(axis=(2, 3)))


def scale_half(x):
    from mlfm.tensor import scale
    return scale(x, 0.5)


class TestSgd:
    def test_single_step(self):
        p = {"w": t64([1.0])}
        g = {"w": np.array([0.5])}
        new, vel = sgd_step(p, g, lr=0.1)
        assert new["w"].item() == pytest.approx(0.95)
        assert vel["w"] == pytest.approx([0.5])

    def test_zero_gradient_fixed_point(self, rng):
        p = {"w": Tensor(rng.standard_normal(5))}
        new, _ = sgd_step(p, {"w": np.zeros(5)}, lr=0.3)
        assert np.array_equal(new["w"].data, p["w"].data)

    def test_momentum_matches_hand_unrolled(self):
        lr, mom, g = 0.1, 0.9, np.array([1.0])
        p = {"w": t64([2.0])}
        p1, v1 = sgd_step(p, {"w": g}, lr=lr, momentum=mom)
        p2, v2 = sgd_step(p1, {"w": g}, lr=lr, momentum=mom, velocity=v1)
        # hand unroll: v1 = g ; p1 = p - lr*v1 ; v2 = mom*v1 + g ; p2 = p1 - lr*v2
        assert v1["w"] == pytest.approx([1.0])
        assert p1["w"].item() == pytest.approx(2.0 - 0.1)
        assert v2["w"] == pytest.approx([1.9])
        assert p2["w"].item() == pytest.approx(1.9 - 0.1 * 1.9)

    def test_weight_decay(self):
        p = {"w": t64([2.0])}
        new, _ = sgd_step(p, {"w": np.array([0.0])}, lr=0.1, weight_decay=0.5)
        assert new["w"].item() == pytest.approx(2.0 - 0.1 * 1.0)

    def test_param_grad_shape_mismatch(self):
        with pytest.raises(ShapeError):
            sgd_step({"w": t64([1.0, 2.0])}, {"w": np.zeros(3)}, lr=0.1)

    def test_invalid_hyperparams(self):
        with pytest.raises(ValueError):
            sgd_step({}, {}, lr=0.0)
        with pytest.raises(ValueError):
            sgd_step({}, {}, lr=0.1, momentum=1.0)


class TestPurity:
    def test_forward_repeatable_bitwise(self, rng):
        x = Tensor(rng.standard_normal((1, 3, 8, 8)).astype(np.float32))
        w = Tensor(rng.standard_normal((4, 3, 3, 3)).astype(np.float32))
        y1 = conv2d(x, w, pad=1)
        y2 = conv2d(x, w, pad=1)
        assert np.array_equal(y1.data, y2.data)
        assert np.array_equal(pool2d(x, "max").data, pool2d(x, "max").data)
