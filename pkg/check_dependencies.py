#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
检查项目依赖是否已安装
"""

import sys
from importlib import metadata

# 包名与 requirements.txt 中固定的版本
REQUIRED_PACKAGES = [
    ("networkx", "3.2.1"),
    ("numpy", "1.26.4"),
]

# 只有运行测试时需要
TEST_PACKAGES = [
    ("hypothesis", "6.98.0"),
]


def get_package_version(package_name):
    """获取已安装包的版本号，未安装时返回 None"""
    try:
        return metadata.version(package_name)
    except metadata.PackageNotFoundError:
        return None


def check_group(title, packages):
    """打印一组依赖的状态，返回是否全部已安装"""
    print(title)
    print("-" * 60)
    all_ok = True
    for package_name, required_version in packages:
        version = get_package_version(package_name)
        if version is None:
            status = "[X] 未安装"
            all_ok = False
        elif version != required_version:
            status = f"[OK] 已安装 (当前版本: {version}, 固定版本: {required_version})"
        else:
            status = f"[OK] 已安装 (版本: {version})"
        print(f"{package_name:20s} {status}")
    print()
    return all_ok


def main():
    """主函数"""
    print("=" * 60)
    print("检查项目依赖库安装情况")
    print("=" * 60)
    print()

    required_ok = check_group("【必需依赖】", REQUIRED_PACKAGES)
    check_group("【测试依赖】", TEST_PACKAGES)

    print("=" * 60)
    if required_ok:
        print("[OK] 所有必需依赖已安装！")
    else:
        print("[X] 部分必需依赖未安装，请运行以下命令安装：")
        print("  pip install -r requirements.txt")
    print("=" * 60)

    print()
    print("【Python 版本】")
    print("-" * 60)
    python_version = sys.version_info
    version_str = f"{python_version.major}.{python_version.minor}.{python_version.micro}"
    if python_version >= (3, 9):
        print(f"[OK] Python {version_str} (满足要求 >= 3.9)")
    else:
        print(f"[X] Python {version_str} (需要 >= 3.9)")
    print("=" * 60)
    return 0 if required_ok else 1


if __name__ == "__main__":
    sys.exit(main())
