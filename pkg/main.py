"""
EdgeAlpha 入口模块：把命令行参数交给 edgealpha.cli 并以其退出码结束进程。
"""

import sys

from edgealpha.cli import run


def main() -> None:
    """
    主函数：执行一次命令行调用。

    实现流程:
        1. 读取配置并安装日志（由全局回调完成）
        2. 分派子命令
        3. 以 0/1/2/3 退出码结束
    """
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
